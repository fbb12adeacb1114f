#include "hetho/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hetho/error.hpp"
#include "parallel.hpp"

namespace hetho
{
namespace
{
struct CircleRadius
{
    CircleId id;
    double radius;
};

std::vector<Crossing>
walk_crossings(double r, std::span<CircleRadius const> circles)
{
    std::vector<Crossing> out;
    for (auto const& c : circles)
    {
        if (auto h = crossing_half_distance(c.radius, r))
        {
            out.push_back({c.id, -*h});
            out.push_back({c.id, *h});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.position < b.position;
    });
    return out;
}

std::optional<double> entry_of(std::vector<Crossing> const& xs, CircleId id)
{
    for (auto const& x : xs)
    {
        if (x.circle == id)
            return x.position;
    }
    return std::nullopt;
}

std::optional<double> exit_of(std::vector<Crossing> const& xs, CircleId id)
{
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    {
        if (it->circle == id)
            return it->position;
    }
    return std::nullopt;
}

void require_inside(Chord const& chord, CircleSet const& circles)
{
    if (!(chord.r >= 0 && chord.r < circles.big_r))
        throw DomainError("chord must pass strictly inside the coverage circle");
}
}  // namespace

//---------------------------------------------------------------------------//
TrajectoryEvents classify_lte(Chord const& chord,
                              CircleSet const& circles,
                              MobilityParams const& mob)
{
    require_inside(chord, circles);
    CircleRadius const radii[] = {
        {CircleId::mue_hof, circles.r_m},
        {CircleId::mue_hom, circles.r_mp},
        {CircleId::coverage, circles.big_r},
        {CircleId::pue_hom, circles.r_pp},
        {CircleId::pue_hof, circles.r_p},
    };
    TrajectoryEvents ev;
    ev.chord = chord;
    ev.crossings = walk_crossings(chord.r, radii);

    auto trigger = entry_of(ev.crossings, CircleId::mue_hom);
    if (!trigger)
    {
        ev.outcome = Outcome::pass_through;
        return ev;
    }
    // TTT runs from the HOM entry; leaving the HOM circle first cancels it
    double const expiry = *trigger + mob.inbound_ttt_distance();
    auto hof_entry = entry_of(ev.crossings, CircleId::mue_hof);
    if (hof_entry && expiry > *hof_entry)
    {
        ev.outcome = Outcome::mue_hof;
        return ev;
    }
    if (expiry > *exit_of(ev.crossings, CircleId::mue_hom))
    {
        ev.outcome = Outcome::no_handover;
        return ev;
    }
    ev.outcome = Outcome::handover;
    ev.inbound_execution = expiry;

    // Outbound A3 holds once the UE leaves the r_pp circle
    double const out_trigger = *exit_of(ev.crossings, CircleId::pue_hom);
    double const out_expiry = out_trigger + mob.outbound_ttt_distance();
    ev.outbound_execution = out_expiry;
    ev.pue_hof = out_expiry > *exit_of(ev.crossings, CircleId::pue_hof);
    ev.tos_distance = out_expiry - expiry;
    ev.ping_pong = *ev.tos_distance < mob.min_stay_distance();
    return ev;
}

TrajectoryEvents classify_zeus(Chord const& chord,
                               CircleSet const& circles,
                               MobilityParams const& mob,
                               bool high_speed_ext)
{
    require_inside(chord, circles);
    CircleRadius const radii[] = {
        {CircleId::mue_hof, circles.r_m},
        {CircleId::mue_hoe, circles.r_me},
        {CircleId::mue_hom, circles.r_mp},
        {CircleId::coverage, circles.big_r},
        {CircleId::pue_hom, circles.r_pp},
        {CircleId::pue_hoe, circles.r_pe},
        {CircleId::pue_hof, circles.r_p},
    };
    TrajectoryEvents ev;
    ev.chord = chord;
    ev.crossings = walk_crossings(chord.r, radii);

    if (!entry_of(ev.crossings, CircleId::mue_hom))
    {
        ev.outcome = Outcome::pass_through;
        return ev;
    }
    if (high_speed_ext && mob.min_stay_distance() > circles.r_thresh)
    {
        ev.outcome = Outcome::no_handover;
        return ev;
    }
    auto execute = entry_of(ev.crossings, CircleId::mue_hoe);
    if (!execute)
    {
        ev.outcome = Outcome::extra_preparation;
        return ev;
    }
    auto hof_entry = entry_of(ev.crossings, CircleId::mue_hof);
    if (hof_entry && *hof_entry < *execute)
    {
        ev.outcome = Outcome::mue_hof;
        return ev;
    }
    ev.outcome = Outcome::handover;
    ev.inbound_execution = *execute;

    double const back = *exit_of(ev.crossings, CircleId::pue_hoe);
    ev.outbound_execution = back;
    ev.pue_hof = back > *exit_of(ev.crossings, CircleId::pue_hof);
    ev.tos_distance = back - *execute;
    ev.ping_pong = *ev.tos_distance < mob.min_stay_distance();
    return ev;
}

//---------------------------------------------------------------------------//
ChordBank::ChordBank(double big_r,
                     std::uint64_t samples,
                     std::uint64_t seed,
                     unsigned workers)
    : big_r_(big_r), r2_(samples)
{
    if (!(big_r > 0))
        throw DomainError("ChordBank: radius must be positive");
    if (samples < 1)
        throw DomainError("ChordBank: need at least one sample");
    double const n = static_cast<double>(samples);
    std::uint64_t const blocks = (samples + block_size - 1) / block_size;
    detail::parallel_tasks(blocks, workers, [&](std::size_t b) {
        ChordSampler stream(seed, b);
        std::uint64_t const begin = b * block_size;
        std::uint64_t const end = std::min(samples, begin + block_size);
        for (std::uint64_t i = begin; i < end; ++i)
        {
            double const alpha = (static_cast<double>(i) + stream.uniform()) / n
                                 * (std::numbers::pi / 2);
            double const r = big_r * std::sin(alpha);
            r2_[i] = r * r;
        }
    });
}

//---------------------------------------------------------------------------//
Estimate make_estimate(std::uint64_t hits, std::uint64_t trials)
{
    Estimate e;
    e.trials = trials;
    e.degenerate = trials < 2;
    if (trials == 0)
        return e;
    e.value = static_cast<double>(hits) / static_cast<double>(trials);
    e.standard_error = std::sqrt(e.value * (1 - e.value) / static_cast<double>(trials));
    return e;
}

bool agrees_with(double empirical, double analytic, std::uint64_t trials, double sigmas)
{
    if (trials == 0)
        return false;
    double const n = static_cast<double>(trials);
    double const se = std::sqrt(std::max(0.0, analytic * (1 - analytic)) / n);
    return std::abs(empirical - analytic) <= sigmas * se + 0.5 / n;
}

double deviation_in_sigmas(double empirical, double analytic, std::uint64_t trials)
{
    double const diff = std::abs(empirical - analytic);
    double const se = std::sqrt(std::max(0.0, analytic * (1 - analytic))
                                / static_cast<double>(trials));
    if (se > 0)
        return diff / se;
    return diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
}

OutcomeReport OracleReport::as_report() const
{
    OutcomeReport r;
    r.policy = policy;
    r.p_nho = p_nho.value;
    r.p_hof_mue = p_hof_mue.value;
    r.p_hof_pue = p_hof_pue.value;
    r.p_pp = p_pp.value;
    r.p_ehop = p_ehop.value;
    r.p_hof_mue_norm = p_hof_mue_norm.value;
    r.p_hof_pue_norm = p_hof_pue_norm.value;
    r.p_pp_norm = p_pp_norm.value;
    return r;
}

OracleReport evaluate_bank(ChordBank const& bank,
                           Policy policy,
                           CircleSet const& circles,
                           MobilityParams const& mob,
                           OracleOptions const& options)
{
    if (bank.big_r() != circles.big_r)
        throw DomainError("evaluate_bank: bank radius differs from the coverage circle");
    mob.validate();
    auto const& table = kernels::kernel_table(options.isa.value_or(kernels::best_isa()));

    kernels::LteGeometry lte;
    lte.r_m2 = circles.r_m * circles.r_m;
    lte.r_mp2 = circles.r_mp * circles.r_mp;
    lte.r_pp2 = circles.r_pp * circles.r_pp;
    lte.r_p2 = circles.r_p * circles.r_p;
    lte.inbound_ttt = mob.inbound_ttt_distance();
    lte.outbound_ttt = mob.outbound_ttt_distance();
    lte.min_stay = mob.min_stay_distance();

    kernels::ZeusGeometry zeus;
    zeus.r_m2 = lte.r_m2;
    zeus.r_me2 = circles.r_me * circles.r_me;
    zeus.r_mp2 = lte.r_mp2;
    zeus.r_pe2 = circles.r_pe * circles.r_pe;
    zeus.r_p2 = lte.r_p2;
    zeus.min_stay = lte.min_stay;
    zeus.suppressed = policy == Policy::zeus_ext && mob.min_stay_distance() > circles.r_thresh;

    // Fixed chunking keeps the integer reduction independent of scheduling
    auto const r2 = bank.squared_offsets();
    std::size_t const chunk = ChordBank::block_size;
    std::size_t const n_chunks = (r2.size() + chunk - 1) / chunk;
    std::vector<kernels::OutcomeCounts> partial(n_chunks);
    detail::parallel_tasks(n_chunks, options.workers, [&](std::size_t i) {
        auto part = r2.subspan(i * chunk, std::min(chunk, r2.size() - i * chunk));
        if (policy == Policy::lte)
            table.count_lte(part, lte, partial[i]);
        else
            table.count_zeus(part, zeus, partial[i]);
    });

    OracleReport rep;
    rep.policy = policy;
    rep.samples = r2.size();
    for (auto const& p : partial)
        rep.counts += p;

    auto const& c = rep.counts;
    std::uint64_t const n = c.total();
    std::uint64_t const not_executed = c.pass_through + c.no_handover + c.extra_preparation;
    rep.p_nho = make_estimate(not_executed, n);
    rep.p_hof_mue = make_estimate(c.mue_hof, n);
    rep.p_hof_pue = make_estimate(c.pue_hof, n);
    rep.p_pp = make_estimate(c.ping_pong, n);
    rep.p_ehop = make_estimate(c.extra_preparation, n);
    rep.p_hof_mue_norm = make_estimate(c.mue_hof, n - not_executed);
    rep.p_hof_pue_norm = make_estimate(c.pue_hof, c.handover);
    rep.p_pp_norm = make_estimate(c.ping_pong, c.handover);
    return rep;
}

OracleReport run_oracle(Policy policy,
                        CircleSet const& circles,
                        MobilityParams const& mob,
                        OracleOptions const& options)
{
    ChordBank bank(circles.big_r, options.samples, options.seed, options.workers);
    return evaluate_bank(bank, policy, circles, mob, options);
}

}  // namespace hetho
