#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chord_geometry.hpp"
#include "kernels.hpp"
#include "linkbudget.hpp"
#include "mobility.hpp"

namespace hetho
{
//---------------------------------------------------------------------------//
// EVENT WALK
//---------------------------------------------------------------------------//
enum class CircleId
{
    mue_hof,   //!< r_m
    mue_hoe,   //!< r_me
    mue_hom,   //!< r_mp
    coverage,  //!< R
    pue_hom,   //!< r_pp
    pue_hoe,   //!< r_pe
    pue_hof,   //!< r_p
};

//! Signed arc-length position (m) along the chord, zero at its midpoint
struct Crossing
{
    CircleId circle;
    double position;
};

enum class Outcome
{
    pass_through,       //!< Never enters the HOM/HOP circle
    no_handover,        //!< Triggered (or kept out) but never executed
    extra_preparation,  //!< ZEUS: prepared but the HOE circle is missed
    mue_hof,
    handover,
};

/*!
 * Classified trajectory.
 *
 * Crossings are sorted by position. Entries and exits of each circle are
 * symmetric about zero, so inner circles nest inside outer ones.
 */
struct TrajectoryEvents
{
    Chord chord;
    std::vector<Crossing> crossings;
    Outcome outcome{Outcome::pass_through};
    bool pue_hof{false};
    bool ping_pong{false};
    std::optional<double> inbound_execution;   //!< Position of the HO into pico
    std::optional<double> outbound_execution;  //!< Position of the HO back
    std::optional<double> tos_distance;        //!< Pico-connected distance
};

//! Walk a chord through the LTE HOM/TTT rules
TrajectoryEvents classify_lte(Chord const& chord,
                              CircleSet const& circles,
                              MobilityParams const& mob);

//! Walk a chord through the ZEUS HOP/HOE rules, optionally with the extension
TrajectoryEvents classify_zeus(Chord const& chord,
                               CircleSet const& circles,
                               MobilityParams const& mob,
                               bool high_speed_ext);

//---------------------------------------------------------------------------//
// SAMPLING
//---------------------------------------------------------------------------//
struct OracleOptions
{
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{1};
    unsigned workers{0};  //!< 0: hardware concurrency
    std::optional<kernels::Isa> isa;  //!< Default: best available
};

/*!
 * Squared offsets of a fixed chord sample through a disc of radius R.
 *
 * Trajectory angles are stratified: sample i draws its angle uniformly in
 * the i-th of n equal slices of [0, pi/2]. Blocks of consecutive indices
 * draw from their own (seed, block) stream, so the bank does not depend on
 * the worker count.
 */
class ChordBank
{
  public:
    static constexpr std::uint64_t block_size = 1 << 16;

    ChordBank(double big_r, std::uint64_t samples, std::uint64_t seed, unsigned workers = 0);

    double big_r() const { return big_r_; }
    std::uint64_t size() const { return r2_.size(); }
    std::span<double const> squared_offsets() const { return r2_; }

  private:
    double big_r_;
    std::vector<double> r2_;
};

//! Empirical fraction with its binomial standard error
struct Estimate
{
    double value{0};
    double standard_error{0};
    bool degenerate{true};  //!< Fewer than two trials behind the fraction
    std::uint64_t trials{0};
};

struct OracleReport
{
    Policy policy{Policy::lte};
    std::uint64_t samples{0};
    kernels::OutcomeCounts counts;
    Estimate p_nho;
    Estimate p_hof_mue;
    Estimate p_hof_pue;
    Estimate p_pp;
    Estimate p_ehop;
    Estimate p_hof_mue_norm;
    Estimate p_hof_pue_norm;
    Estimate p_pp_norm;

    OutcomeReport as_report() const;
};

//! Classify every chord of a bank; circles.big_r must match the bank
OracleReport evaluate_bank(ChordBank const& bank,
                           Policy policy,
                           CircleSet const& circles,
                           MobilityParams const& mob,
                           OracleOptions const& options = {});

OracleReport run_oracle(Policy policy,
                        CircleSet const& circles,
                        MobilityParams const& mob,
                        OracleOptions const& options);

//! Fraction from integer counts; both raw and normalized rates use this
Estimate make_estimate(std::uint64_t hits, std::uint64_t trials);

/*!
 * Analytic value within \c sigmas binomial standard errors of an empirical
 * fraction over \c trials samples, plus half a count for discreteness.
 */
bool agrees_with(double empirical, double analytic, std::uint64_t trials, double sigmas = 3.0);

//! |empirical - analytic| in units of the analytic binomial standard error
double deviation_in_sigmas(double empirical, double analytic, std::uint64_t trials);

}  // namespace hetho
