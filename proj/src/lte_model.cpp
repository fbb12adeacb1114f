#include "hetho/lte_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hetho/chord_geometry.hpp"

namespace hetho
{
namespace
{
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

double sq(double x)
{
    return x * x;
}

//! asin(sqrt(s)) with s clamped to [0,1] against rounding only
double asin_sqrt(double s)
{
    return std::asin(std::sqrt(std::clamp(s, 0.0, 1.0)));
}

//! Inbound TTT longer than the longest HOM-circle dwell of a HOF-free chord
bool inbound_ttt_exceeds_dwell(CircleSet const& c, double x)
{
    return x > 2 * std::sqrt(sq(c.r_mp) - sq(c.r_m));
}
}  // namespace

//---------------------------------------------------------------------------//
std::optional<double> theta_angle(CircleSet const& c, MobilityParams const& mob)
{
    double const x = mob.inbound_ttt_distance();
    if (inbound_ttt_exceeds_dwell(c, x))
        return std::nullopt;
    return asin_sqrt(sq(c.r_mp / c.big_r) - sq(x / (2 * c.big_r)));
}

ChordAngle beta_angle(CircleSet const& c, MobilityParams const& mob)
{
    double const x = mob.inbound_ttt_distance();
    double const gap2 = sq(c.r_mp) - sq(c.r_m);
    if (x < c.r_mp - c.r_m)
        return ChordAngle::none();
    if (x > std::sqrt(gap2))
    {
        // Every chord that reaches the HOF circle fails
        return ChordAngle::at(std::asin(c.r_m / c.big_r));
    }
    double const inner = (gap2 - sq(x)) / (2 * c.big_r * x);
    return ChordAngle::at(asin_sqrt(sq(c.r_m / c.big_r) - sq(inner)));
}

ChordAngle delta_angle(CircleSet const& c, MobilityParams const& mob)
{
    double const y = mob.outbound_ttt_distance();
    if (y < c.r_p - c.r_pp)
        return ChordAngle::none();
    // The HOM-to-HOF gap grows with r; it is widest for the tangent chord
    double const widest_gap = std::sqrt(sq(c.r_p) - sq(c.big_r))
                              - std::sqrt(sq(c.r_pp) - sq(c.big_r));
    if (y > widest_gap)
        return ChordAngle::all();
    double const inner = (sq(c.r_p) - sq(c.r_pp) - sq(y)) / (2 * c.big_r * y);
    return ChordAngle::at(asin_sqrt(sq(c.r_pp / c.big_r) - sq(inner)));
}

//---------------------------------------------------------------------------//
double lte_nho_chord(CircleSet const& c, MobilityParams const& mob)
{
    if (auto theta = theta_angle(c, mob))
        return 2 * c.big_r * std::cos(*theta);
    return chord_length(c.r_m, c.big_r);
}

double lte_mue_hof_chord(CircleSet const& c, MobilityParams const& mob)
{
    auto beta = beta_angle(c, mob);
    if (beta.kind == ChordAngle::Kind::none)
        return 2 * c.big_r;
    return 2 * c.big_r * std::cos(beta.value);
}

double p_nho_lte(CircleSet const& c, MobilityParams const& mob)
{
    if (auto theta = theta_angle(c, mob))
        return 1 - kTwoOverPi * *theta;
    return 1
           - kTwoOverPi
                 * std::atan(c.r_m / std::sqrt(sq(c.big_r) - sq(c.r_m)));
}

RatePair p_hof_mue_lte(CircleSet const& c, MobilityParams const& mob)
{
    RatePair result;
    auto beta = beta_angle(c, mob);
    if (beta.kind == ChordAngle::Kind::angle)
        result.raw = kTwoOverPi * beta.value;
    result.normalized = normalized_rate(result.raw, 1 - p_nho_lte(c, mob));
    return result;
}

RatePair p_hof_pue_lte(CircleSet const& c, MobilityParams const& mob)
{
    RatePair result;
    double const x = mob.inbound_ttt_distance();
    auto delta = delta_angle(c, mob);
    if (inbound_ttt_exceeds_dwell(c, x) || delta.kind == ChordAngle::Kind::none)
        return result;

    double const hof_p_chord = delta.kind == ChordAngle::Kind::all
                                   ? 0.0
                                   : 2 * c.big_r * std::cos(delta.value);
    double const lo = std::max(hof_p_chord, lte_nho_chord(c, mob));
    double const hi = lte_mue_hof_chord(c, mob);
    if (lo < hi)
        result.raw = prob_chord_between(lo, hi, c.big_r);

    double const at_risk = 1 - p_nho_lte(c, mob) - p_hof_mue_lte(c, mob).raw;
    result.normalized = normalized_rate(result.raw, at_risk);
    return result;
}

double lte_stay_distance(CircleSet const& c, MobilityParams const& mob, double r)
{
    return std::sqrt(sq(c.r_mp) - sq(r)) + std::sqrt(sq(c.r_pp) - sq(r))
           - mob.inbound_ttt_distance() + mob.outbound_ttt_distance();
}

RatePair p_pp_lte(CircleSet const& c, MobilityParams const& mob)
{
    RatePair result;
    double const lo = lte_nho_chord(c, mob);
    double hi = lte_mue_hof_chord(c, mob);

    // Stay distance is sqrt(r_mp^2-r^2) + sqrt(r_pp^2-r^2) - vT_m + vT_p,
    // decreasing in r; PP holds for chords offset beyond the root of
    // sqrt(r_mp^2-r^2) + sqrt(r_pp^2-r^2) = target.
    double const target = mob.min_stay_distance() + mob.inbound_ttt_distance()
                          - mob.outbound_ttt_distance();
    double const shortest = std::sqrt(sq(c.r_pp) - sq(c.r_mp));
    double const longest = c.r_mp + c.r_pp;
    if (target <= shortest)
    {
        hi = lo;
    }
    else if (target < longest)
    {
        double const h_mp
            = (sq(target) + sq(c.r_mp) - sq(c.r_pp)) / (2 * target);
        double const r_root = std::sqrt(std::max(0.0, sq(c.r_mp) - sq(h_mp)));
        hi = std::min(hi, chord_length(std::min(r_root, c.big_r), c.big_r));
    }
    if (lo < hi)
        result.raw = prob_chord_between(lo, hi, c.big_r);

    double const at_risk = 1 - p_nho_lte(c, mob) - p_hof_mue_lte(c, mob).raw;
    result.normalized = normalized_rate(result.raw, at_risk);
    return result;
}

OutcomeReport evaluate_lte(CircleSet const& c, MobilityParams const& mob)
{
    mob.validate();
    OutcomeReport rep;
    rep.policy = Policy::lte;
    rep.p_nho = p_nho_lte(c, mob);
    auto mue = p_hof_mue_lte(c, mob);
    auto pue = p_hof_pue_lte(c, mob);
    auto pp = p_pp_lte(c, mob);
    rep.p_hof_mue = mue.raw;
    rep.p_hof_mue_norm = mue.normalized;
    rep.p_hof_pue = pue.raw;
    rep.p_hof_pue_norm = pue.normalized;
    rep.p_pp = pp.raw;
    rep.p_pp_norm = pp.normalized;
    rep.p_ehop = 0;
    return rep;
}

}  // namespace hetho
