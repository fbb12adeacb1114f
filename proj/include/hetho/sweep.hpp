#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkbudget.hpp"
#include "mc_oracle.hpp"
#include "mobility.hpp"

namespace hetho
{
//---------------------------------------------------------------------------//
// CONFIGURATION
//---------------------------------------------------------------------------//
//! LTE parameter set: one A3 offset (applied +/-) and one TTT for both ways
struct LteParamSet
{
    double hom_db{2};
    double ttt_ms{480};
};

//! ZEUS parameter set: preparation and execution offsets (applied +/-)
struct ZeusParamSet
{
    double hop_db{2};
    double hoe_db{3};
};

enum class SweepPolicy
{
    lte,
    zeus,
    zeus_ext,      //!< r_thresh per ext_threshold (default R)
    zeus_ext_rmp,  //!< r_thresh = r_mp
};

std::string_view to_string(SweepPolicy p);
SweepPolicy parse_sweep_policy(std::string_view token);

enum class ExtThreshold
{
    coverage,  //!< R
    r_mp,
};

/*!
 * Scenario file contents.
 *
 * Sections [macro], [pico], [geometry], [offsets] describe the radio
 * scenario; an optional [sweep] section sets the grid when no preset is
 * given. Keys left out keep the LTE HetNet calibration defaults.
 */
struct ScenarioConfig
{
    RadioScenario scenario = RadioScenario::lte_hetnet(250);
    HoOffsets offsets;

    std::optional<std::vector<double>> velocities_kmh;
    std::optional<std::vector<LteParamSet>> lte_sets;
    std::optional<std::vector<ZeusParamSet>> zeus_sets;
    std::optional<double> t_pp_s;
    ExtThreshold ext_threshold{ExtThreshold::coverage};
};

ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(std::string const& path);
void write_config(std::ostream& out, ScenarioConfig const& config);

//! "5:120:5" (inclusive range) or "3,30,60,120"
std::vector<double> parse_velocity_grid(std::string_view text);

//---------------------------------------------------------------------------//
// SWEEPS
//---------------------------------------------------------------------------//
struct SweepSpec
{
    std::vector<RadioScenario> scenarios;
    HoOffsets base_offsets;  //!< Supplies the Q_in thresholds
    std::vector<SweepPolicy> policies{SweepPolicy::lte, SweepPolicy::zeus,
                                      SweepPolicy::zeus_ext};
    std::vector<double> velocities_kmh;
    std::vector<LteParamSet> lte_sets;
    std::vector<ZeusParamSet> zeus_sets;
    double t_pp_s{1.0};
    ExtThreshold ext_threshold{ExtThreshold::coverage};

    bool validate{false};
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{1};
    unsigned workers{0};

    //! Throws ConfigError naming the offending field
    void check() const;
};

//! 5..120 km/h in 5 km/h steps
std::vector<double> default_velocity_grid();

//! Offsets for an LTE set; the unused HOE pair sits midway to Q_in
HoOffsets lte_offsets(HoOffsets const& base, LteParamSet const& set);
HoOffsets zeus_offsets(HoOffsets const& base, ZeusParamSet const& set);

/*!
 * Built-in sweeps: "fig7" (250 m), "fig8" (75 m), "fig9" (125 m).
 *
 * Radio parameters and Q_in thresholds come from \c config; the preset
 * fixes distance, parameter sets and velocity grid.
 */
SweepSpec make_preset(std::string_view name, ScenarioConfig const& config);

//! Spec from a config file alone (its [sweep] section or the defaults)
SweepSpec make_config_sweep(ScenarioConfig const& config);

struct SweepRow
{
    SweepPolicy policy{SweepPolicy::lte};
    double distance_m{0};
    double hom_db{0};               //!< HOM (LTE) or HOP (ZEUS)
    std::optional<double> hoe_db;   //!< ZEUS only
    std::optional<double> ttt_ms;   //!< LTE only
    double v_kmh{0};
    OutcomeReport analytic;
    std::optional<OracleReport> empirical;
};

struct ValidationSummary
{
    std::uint64_t points{0};
    std::uint64_t checks{0};
    std::uint64_t failures{0};
    double max_abs_deviation{0};
    double max_deviation_sigmas{0};
    std::uint64_t zeus_hof_events{0};

    bool passed() const { return failures == 0 && zeus_hof_events == 0; }
};

struct SweepResult
{
    std::vector<SweepRow> rows;
    std::optional<ValidationSummary> validation;
};

SweepResult run_sweep(SweepSpec const& spec);

//! Oracle agreement of all raw probabilities of one row
bool row_agrees(SweepRow const& row, double sigmas = 3.0);

void write_sweep_csv(std::ostream& out, SweepResult const& result);

//---------------------------------------------------------------------------//
// TABLE OF RADII
//---------------------------------------------------------------------------//
struct Table4Cell
{
    double m2p{0};
    double p2m{0};
    double radius{0};
};

struct Table4Row
{
    double rss_diff_db{0};
    std::vector<Table4Cell> cells;  //!< One per scenario, input order
};

//! Config radio parameters at 250, 125 and 75 m, in table column order
std::vector<RadioScenario> table4_scenarios(ScenarioConfig const& config);

//! RSS_diff values of the radius table, -8 .. 8 dB
std::vector<double> table4_rss_diffs();

std::vector<Table4Row> compute_table4(std::vector<RadioScenario> const& scenarios);

//! CSV with m2p/p2m/radius columns per distance, two decimals
std::string emit_table4(std::vector<RadioScenario> const& scenarios);

}  // namespace hetho
