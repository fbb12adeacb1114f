#include "hetho/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "hetho/error.hpp"
#include "hetho/zeus_model.hpp"
#include "parallel.hpp"

namespace hetho
{
namespace
{
RadioScenario at_distance(RadioScenario s, double distance_m)
{
    s.macro_pico_distance_m = distance_m;
    return s;
}

std::string fmt(char const* spec, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

std::string g6(double value)
{
    return fmt("%.6g", value);
}

std::string g6(std::optional<double> const& value)
{
    return value ? g6(*value) : std::string{};
}

// One sweep point before evaluation
struct Point
{
    std::size_t scenario;
    SweepPolicy policy;
    std::optional<LteParamSet> lte;
    std::optional<ZeusParamSet> zeus;
    double v_kmh;
};

Policy model_policy(SweepPolicy p)
{
    switch (p)
    {
        case SweepPolicy::lte:
            return Policy::lte;
        case SweepPolicy::zeus:
            return Policy::zeus;
        case SweepPolicy::zeus_ext:
        case SweepPolicy::zeus_ext_rmp:
            return Policy::zeus_ext;
    }
    return Policy::lte;
}

bool is_zeus(SweepPolicy p)
{
    return p != SweepPolicy::lte;
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(SweepPolicy p)
{
    switch (p)
    {
        case SweepPolicy::lte:
            return "lte";
        case SweepPolicy::zeus:
            return "zeus";
        case SweepPolicy::zeus_ext:
            return "zeus-ext";
        case SweepPolicy::zeus_ext_rmp:
            return "zeus-ext-rmp";
    }
    return "?";
}

SweepPolicy parse_sweep_policy(std::string_view token)
{
    for (auto p : {SweepPolicy::lte,
                   SweepPolicy::zeus,
                   SweepPolicy::zeus_ext,
                   SweepPolicy::zeus_ext_rmp})
    {
        if (token == to_string(p))
            return p;
    }
    throw ConfigError("policies", "unknown policy '" + std::string(token) + "'");
}

void SweepSpec::check() const
{
    if (scenarios.empty())
        throw ConfigError("scenarios", "no scenario to sweep");
    for (auto const& s : scenarios)
    {
        try
        {
            s.validate();
        }
        catch (DomainError const& e)
        {
            throw ConfigError("geometry", e.what());
        }
    }
    if (policies.empty())
        throw ConfigError("policies", "no policy selected");
    if (velocities_kmh.empty())
        throw ConfigError("velocities_kmh", "velocity grid is empty");
    for (std::size_t i = 0; i < velocities_kmh.size(); ++i)
    {
        if (!(velocities_kmh[i] > 0) || !std::isfinite(velocities_kmh[i]))
            throw ConfigError("velocities_kmh", "velocities must be positive");
        if (i > 0 && !(velocities_kmh[i] > velocities_kmh[i - 1]))
            throw ConfigError("velocities_kmh", "velocities must be strictly increasing");
    }
    bool const wants_lte
        = std::find(policies.begin(), policies.end(), SweepPolicy::lte) != policies.end();
    bool const wants_zeus = std::any_of(policies.begin(), policies.end(), is_zeus);
    if (wants_lte && lte_sets.empty())
        throw ConfigError("lte_sets", "no LTE parameter set");
    if (wants_zeus && zeus_sets.empty())
        throw ConfigError("zeus_sets", "no ZEUS parameter set");
    for (auto const& set : lte_sets)
    {
        if (!(set.ttt_ms >= 0))
            throw ConfigError("lte_sets", "TTT must be non-negative");
    }
    if (!(t_pp_s > 0))
        throw ConfigError("t_pp_s", "minimum time-of-stay must be positive");
    if (validate && samples < 1)
        throw ConfigError("samples", "need at least one sample");
    try
    {
        if (wants_lte)
        {
            for (auto const& set : lte_sets)
                lte_offsets(base_offsets, set).validate();
        }
        if (wants_zeus)
        {
            for (auto const& set : zeus_sets)
                zeus_offsets(base_offsets, set).validate();
        }
    }
    catch (InconsistentOffsetsError const& e)
    {
        throw ConfigError("offsets", e.what());
    }
}

std::vector<double> default_velocity_grid()
{
    std::vector<double> grid;
    for (int v = 5; v <= 120; v += 5)
        grid.push_back(v);
    return grid;
}

HoOffsets lte_offsets(HoOffsets const& base, LteParamSet const& set)
{
    HoOffsets o = base;
    o.hom_in_db = set.hom_db;
    o.hom_out_db = -set.hom_db;
    o.hoe_in_db = 0.5 * (set.hom_db + base.qin_in_db);
    o.hoe_out_db = 0.5 * (-set.hom_db + base.qin_out_db);
    return o;
}

HoOffsets zeus_offsets(HoOffsets const& base, ZeusParamSet const& set)
{
    HoOffsets o = base;
    o.hom_in_db = set.hop_db;
    o.hom_out_db = -set.hop_db;
    o.hoe_in_db = set.hoe_db;
    o.hoe_out_db = -set.hoe_db;
    return o;
}

//---------------------------------------------------------------------------//
SweepSpec make_preset(std::string_view name, ScenarioConfig const& config)
{
    double distance = 0;
    std::vector<LteParamSet> lte{{2, 480}, {1, 480}, {2, 80}, {1, 80}};
    if (name == "fig7")
    {
        distance = 250;
    }
    else if (name == "fig8")
    {
        distance = 75;
    }
    else if (name == "fig9")
    {
        distance = 125;
        lte.insert(lte.begin() + 2, {{2, 160}, {1, 160}});
    }
    else
    {
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
    }

    SweepSpec spec;
    spec.scenarios = {at_distance(config.scenario, distance)};
    spec.base_offsets = config.offsets;
    spec.velocities_kmh = default_velocity_grid();
    spec.lte_sets = std::move(lte);
    spec.zeus_sets = {{2, 3}, {1, 2}};
    spec.t_pp_s = config.t_pp_s.value_or(1.0);
    spec.ext_threshold = config.ext_threshold;
    return spec;
}

SweepSpec make_config_sweep(ScenarioConfig const& config)
{
    SweepSpec spec;
    spec.scenarios = {config.scenario};
    spec.base_offsets = config.offsets;
    spec.velocities_kmh = config.velocities_kmh.value_or(default_velocity_grid());
    spec.lte_sets = config.lte_sets.value_or(
        std::vector<LteParamSet>{{config.offsets.hom_in_db, 480}});
    spec.zeus_sets = config.zeus_sets.value_or(std::vector<ZeusParamSet>{
        {config.offsets.hom_in_db, config.offsets.hoe_in_db}});
    spec.t_pp_s = config.t_pp_s.value_or(1.0);
    spec.ext_threshold = config.ext_threshold;
    return spec;
}

//---------------------------------------------------------------------------//
SweepResult run_sweep(SweepSpec const& spec)
{
    spec.check();

    std::vector<Point> points;
    for (std::size_t s = 0; s < spec.scenarios.size(); ++s)
    {
        for (auto policy : spec.policies)
        {
            if (policy == SweepPolicy::lte)
            {
                for (auto const& set : spec.lte_sets)
                {
                    for (double v : spec.velocities_kmh)
                        points.push_back({s, policy, set, std::nullopt, v});
                }
            }
            else
            {
                for (auto const& set : spec.zeus_sets)
                {
                    for (double v : spec.velocities_kmh)
                        points.push_back({s, policy, std::nullopt, set, v});
                }
            }
        }
    }

    auto circles_of = [&](Point const& p) {
        auto const offsets = p.lte ? lte_offsets(spec.base_offsets, *p.lte)
                                   : zeus_offsets(spec.base_offsets, *p.zeus);
        CircleSet c = build_circle_set(spec.scenarios[p.scenario], offsets);
        bool const at_r_mp = p.policy == SweepPolicy::zeus_ext_rmp
                             || (p.policy == SweepPolicy::zeus_ext
                                 && spec.ext_threshold == ExtThreshold::r_mp);
        c.r_thresh = at_r_mp ? c.r_mp : c.big_r;
        return c;
    };
    auto mobility_of = [&](Point const& p) {
        MobilityParams mob;
        mob.speed = Speed::from_kmh(p.v_kmh);
        if (p.lte)
        {
            mob.t_m_s = p.lte->ttt_ms / 1000;
            mob.t_p_s = p.lte->ttt_ms / 1000;
        }
        mob.t_pp_s = spec.t_pp_s;
        return mob;
    };

    SweepResult result;
    result.rows.resize(points.size());
    detail::parallel_tasks(points.size(), spec.workers, [&](std::size_t i) {
        auto const& p = points[i];
        auto& row = result.rows[i];
        row.policy = p.policy;
        row.distance_m = spec.scenarios[p.scenario].macro_pico_distance_m;
        row.v_kmh = p.v_kmh;
        if (p.lte)
        {
            row.hom_db = p.lte->hom_db;
            row.ttt_ms = p.lte->ttt_ms;
        }
        else
        {
            row.hom_db = p.zeus->hop_db;
            row.hoe_db = p.zeus->hoe_db;
        }
        row.analytic = evaluate(model_policy(p.policy), circles_of(p), mobility_of(p));
    });

    if (!spec.validate)
        return result;

    ValidationSummary summary;
    OracleOptions options;
    options.samples = spec.samples;
    options.seed = spec.seed;
    options.workers = spec.workers;
    std::optional<ChordBank> bank;
    std::size_t bank_scenario = spec.scenarios.size();
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        auto const& p = points[i];
        auto const circles = circles_of(p);
        if (p.scenario != bank_scenario)
        {
            bank.emplace(circles.big_r, spec.samples, spec.seed, spec.workers);
            bank_scenario = p.scenario;
        }
        auto& row = result.rows[i];
        row.empirical
            = evaluate_bank(*bank, model_policy(p.policy), circles, mobility_of(p), options);

        auto const& a = row.analytic;
        auto const& e = *row.empirical;
        std::pair<double, Estimate const*> const checks[] = {
            {a.p_nho, &e.p_nho},
            {a.p_hof_mue, &e.p_hof_mue},
            {a.p_hof_pue, &e.p_hof_pue},
            {a.p_pp, &e.p_pp},
            {a.p_ehop, &e.p_ehop},
        };
        for (auto const& [analytic, est] : checks)
        {
            ++summary.checks;
            if (!agrees_with(est->value, analytic, est->trials))
                ++summary.failures;
            summary.max_abs_deviation
                = std::max(summary.max_abs_deviation, std::abs(est->value - analytic));
            summary.max_deviation_sigmas
                = std::max(summary.max_deviation_sigmas,
                           deviation_in_sigmas(est->value, analytic, est->trials));
        }
        if (is_zeus(p.policy))
            summary.zeus_hof_events += e.counts.mue_hof + e.counts.pue_hof;
        ++summary.points;
    }
    result.validation = summary;
    return result;
}

bool row_agrees(SweepRow const& row, double sigmas)
{
    if (!row.empirical)
        return false;
    auto const& a = row.analytic;
    auto const& e = *row.empirical;
    return agrees_with(e.p_nho.value, a.p_nho, e.p_nho.trials, sigmas)
           && agrees_with(e.p_hof_mue.value, a.p_hof_mue, e.p_hof_mue.trials, sigmas)
           && agrees_with(e.p_hof_pue.value, a.p_hof_pue, e.p_hof_pue.trials, sigmas)
           && agrees_with(e.p_pp.value, a.p_pp, e.p_pp.trials, sigmas)
           && agrees_with(e.p_ehop.value, a.p_ehop, e.p_ehop.trials, sigmas);
}

void write_sweep_csv(std::ostream& out, SweepResult const& result)
{
    bool const validated = result.validation.has_value();
    out << "policy,distance_m,hom_hop_db,hoe_db,ttt_ms,v_kmh,p_nho,p_hof_mue_raw,"
           "p_hof_mue_norm,p_hof_pue_raw,p_hof_pue_norm,p_pp_raw,p_pp_norm,p_ehop";
    if (validated)
    {
        out << ",mc_p_nho,mc_p_hof_mue_raw,mc_p_hof_mue_norm,mc_p_hof_pue_raw,"
               "mc_p_hof_pue_norm,mc_p_pp_raw,mc_p_pp_norm,mc_p_ehop,mc_samples,mc_agree";
    }
    out << '\n';
    for (auto const& row : result.rows)
    {
        auto const& a = row.analytic;
        out << to_string(row.policy) << ',' << g6(row.distance_m) << ',' << g6(row.hom_db)
            << ',' << g6(row.hoe_db) << ',' << g6(row.ttt_ms) << ',' << g6(row.v_kmh) << ','
            << g6(a.p_nho) << ',' << g6(a.p_hof_mue) << ',' << g6(a.p_hof_mue_norm) << ','
            << g6(a.p_hof_pue) << ',' << g6(a.p_hof_pue_norm) << ',' << g6(a.p_pp) << ','
            << g6(a.p_pp_norm) << ',' << g6(a.p_ehop);
        if (validated && row.empirical)
        {
            auto const& e = *row.empirical;
            out << ',' << g6(e.p_nho.value) << ',' << g6(e.p_hof_mue.value) << ','
                << g6(e.p_hof_mue_norm.value) << ',' << g6(e.p_hof_pue.value) << ','
                << g6(e.p_hof_pue_norm.value) << ',' << g6(e.p_pp.value) << ','
                << g6(e.p_pp_norm.value) << ',' << g6(e.p_ehop.value) << ',' << e.samples
                << ',' << (row_agrees(row) ? 1 : 0);
        }
        out << '\n';
    }
    if (validated)
    {
        auto const& v = *result.validation;
        out << "# validation points=" << v.points << " checks=" << v.checks
            << " failures=" << v.failures << " max_abs_deviation=" << g6(v.max_abs_deviation)
            << " max_deviation_sigmas=" << g6(v.max_deviation_sigmas)
            << " zeus_hof_events=" << v.zeus_hof_events << '\n';
    }
}

//---------------------------------------------------------------------------//
std::vector<RadioScenario> table4_scenarios(ScenarioConfig const& config)
{
    return {at_distance(config.scenario, 250),
            at_distance(config.scenario, 125),
            at_distance(config.scenario, 75)};
}

std::vector<double> table4_rss_diffs()
{
    return {-8, -6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 6, 8};
}

std::vector<Table4Row> compute_table4(std::vector<RadioScenario> const& scenarios)
{
    std::vector<Table4Row> rows;
    for (double diff : table4_rss_diffs())
    {
        Table4Row row;
        row.rss_diff_db = diff;
        for (auto const& s : scenarios)
        {
            auto const b = boundary_distances(s, diff);
            row.cells.push_back({b.m2p, b.p2m, circle_radius(s, diff)});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string emit_table4(std::vector<RadioScenario> const& scenarios)
{
    std::ostringstream out;
    out << "rss_diff_db";
    for (auto const& s : scenarios)
    {
        auto const d = g6(s.macro_pico_distance_m);
        out << ",m2p_" << d << "m,p2m_" << d << "m,radius_" << d << 'm';
    }
    out << '\n';
    for (auto const& row : compute_table4(scenarios))
    {
        out << g6(row.rss_diff_db);
        for (auto const& c : row.cells)
            out << ',' << fmt("%.2f", c.m2p) << ',' << fmt("%.2f", c.p2m) << ','
                << fmt("%.2f", c.radius);
        out << '\n';
    }
    return out.str();
}

}  // namespace hetho
