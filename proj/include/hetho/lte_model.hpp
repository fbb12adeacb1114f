#pragma once

#include <optional>

#include "linkbudget.hpp"
#include "mobility.hpp"

namespace hetho
{
//---------------------------------------------------------------------------//
/*!
 * Boundary angle of a chord family, or a marker for a degenerate family.
 *
 * \c none: the event holds for no chord. \c all: it holds for every chord
 * through the disc. \c angle: it holds on one side of the chord with
 * trajectory angle \c value.
 */
struct ChordAngle
{
    enum class Kind
    {
        none,
        angle,
        all
    };

    Kind kind{Kind::none};
    double value{0};

    static ChordAngle none() { return {Kind::none, 0}; }
    static ChordAngle all() { return {Kind::all, 0}; }
    static ChordAngle at(double a) { return {Kind::angle, a}; }
};

//! Raw chord mass plus its 3GPP-normalized rate
struct RatePair
{
    double raw{0};
    double normalized{0};
};

//---------------------------------------------------------------------------//
// LTE HANDOVER (single A3 event + TTT)
//---------------------------------------------------------------------------//
/*!
 * Angle at which the chord spends exactly vT_m inside the r_mp circle.
 *
 * Empty when vT_m > 2 sqrt(r_mp^2 - r_m^2), where NHO is governed by the
 * tangent to the MUE HOF circle instead.
 */
std::optional<double> theta_angle(CircleSet const& c, MobilityParams const& mob);

//! Angle at which the TTT expires exactly on the MUE HOF circle
ChordAngle beta_angle(CircleSet const& c, MobilityParams const& mob);

//! Angle at which the outbound TTT expires exactly on the PUE HOF circle
ChordAngle delta_angle(CircleSet const& c, MobilityParams const& mob);

//! Longest chord that ends in NHO
double lte_nho_chord(CircleSet const& c, MobilityParams const& mob);
//! Shortest chord that ends in MUE HOF (2R when MUE HOF is impossible)
double lte_mue_hof_chord(CircleSet const& c, MobilityParams const& mob);

double p_nho_lte(CircleSet const& c, MobilityParams const& mob);
RatePair p_hof_mue_lte(CircleSet const& c, MobilityParams const& mob);
RatePair p_hof_pue_lte(CircleSet const& c, MobilityParams const& mob);
RatePair p_pp_lte(CircleSet const& c, MobilityParams const& mob);

//! Pico time-of-stay distance of a successful LTE handover at offset r
double lte_stay_distance(CircleSet const& c, MobilityParams const& mob, double r);

OutcomeReport evaluate_lte(CircleSet const& c, MobilityParams const& mob);

}  // namespace hetho
