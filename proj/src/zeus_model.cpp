#include "hetho/zeus_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hetho/chord_geometry.hpp"
#include "hetho/error.hpp"

namespace hetho
{
namespace
{
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

double sq(double x)
{
    return x * x;
}

double tangent_mass(double radius, double big_r)
{
    return kTwoOverPi * std::atan(radius / std::sqrt(sq(big_r) - sq(radius)));
}
}  // namespace

double p_nho_zeus(CircleSet const& c)
{
    return 1 - tangent_mass(c.r_me, c.big_r);
}

double p_ehop_zeus(CircleSet const& c)
{
    double const p_nhop = 1 - tangent_mass(c.r_mp, c.big_r);
    return std::max(0.0, p_nho_zeus(c) - p_nhop);
}

HofPair p_hof_zeus(CircleSet const& c)
{
    c.validate();
    return {};
}

ChordAngle phi_angle(CircleSet const& c, MobilityParams const& mob)
{
    double const y = mob.min_stay_distance();
    if (std::sqrt(sq(c.r_pe) - sq(c.r_me)) > y)
        return ChordAngle::none();
    if (c.r_me + c.r_pe < y)
        return ChordAngle::all();
    // sqrt(r_me^2 - r^2) + sqrt(r_pe^2 - r^2) = y solved for the r_pe leg
    double const inner = (sq(c.r_pe) - sq(c.r_me) + sq(y)) / (2 * c.big_r * y);
    double const s = std::clamp(sq(c.r_pe / c.big_r) - sq(inner), 0.0, 1.0);
    return ChordAngle::at(std::asin(std::sqrt(s)));
}

double zeus_stay_distance(CircleSet const& c, double r)
{
    if (!(r >= 0 && r <= c.r_me))
        throw DomainError("zeus_stay_distance: chord misses the HOE circle");
    return std::sqrt(sq(c.r_me) - sq(r)) + std::sqrt(sq(c.r_pe) - sq(r));
}

RatePair p_pp_zeus(CircleSet const& c, MobilityParams const& mob)
{
    RatePair result;
    double const executed_from = chord_length(c.r_me, c.big_r);
    auto phi = phi_angle(c, mob);
    switch (phi.kind)
    {
        case ChordAngle::Kind::none:
            break;
        case ChordAngle::Kind::all:
            result.raw = prob_chord_between(executed_from, 2 * c.big_r, c.big_r);
            break;
        case ChordAngle::Kind::angle: {
            double const upper = 2 * c.big_r * std::cos(phi.value);
            if (executed_from < upper)
                result.raw = prob_chord_between(executed_from, upper, c.big_r);
            break;
        }
    }
    // ZEUS has no MUE HOF, so the at-risk population is 1 - P_NHO
    result.normalized = normalized_rate(result.raw, 1 - p_nho_zeus(c));
    return result;
}

double time_to_execute(CircleSet const& c, double r, Speed speed)
{
    if (!(r >= 0 && r < c.r_me))
        throw DomainError("time_to_execute: chord must cross the HOE circle");
    if (!(speed.mps() > 0))
        throw DomainError("time_to_execute: speed must be positive");
    return (std::sqrt(sq(c.r_mp) - sq(r)) - std::sqrt(sq(c.r_me) - sq(r)))
           / speed.mps();
}

OutcomeReport evaluate_zeus(CircleSet const& c, MobilityParams const& mob)
{
    mob.validate();
    OutcomeReport rep;
    rep.policy = Policy::zeus;
    rep.p_nho = p_nho_zeus(c);
    auto hof = p_hof_zeus(c);
    rep.p_hof_mue = hof.mue;
    rep.p_hof_pue = hof.pue;
    auto pp = p_pp_zeus(c, mob);
    rep.p_pp = pp.raw;
    rep.p_pp_norm = pp.normalized;
    rep.p_ehop = p_ehop_zeus(c);
    return rep;
}

OutcomeReport apply_high_speed_ext(OutcomeReport report,
                                   CircleSet const& c,
                                   MobilityParams const& mob)
{
    report.policy = Policy::zeus_ext;
    if (!(mob.min_stay_distance() > c.r_thresh))
        return report;
    // Preparation is never started, so nothing can be wasted or fail either
    report.p_nho = 1;
    report.p_pp = 0;
    report.p_ehop = 0;
    report.p_hof_mue = 0;
    report.p_hof_pue = 0;
    report.p_hof_mue_norm = 0;
    report.p_hof_pue_norm = 0;
    report.p_pp_norm = 0;
    return report;
}

OutcomeReport evaluate(Policy policy, CircleSet const& c, MobilityParams const& mob)
{
    switch (policy)
    {
        case Policy::lte:
            return evaluate_lte(c, mob);
        case Policy::zeus:
            return evaluate_zeus(c, mob);
        case Policy::zeus_ext:
            return apply_high_speed_ext(evaluate_zeus(c, mob), c, mob);
    }
    return {};
}

}  // namespace hetho
