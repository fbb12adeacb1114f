#include "hetho/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hetho/error.hpp"

namespace hetho
{
namespace
{
// Bracket margin around the sites and the bisection stopping width.
constexpr double kSiteMargin = 1e-3;
constexpr double kRootWidth = 1e-9;
constexpr int kMaxBisections = 200;

template<class F>
double bisect(F&& f, double lo, double hi)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0)
        return lo;
    if (fhi == 0)
        return hi;
    if ((flo < 0) == (fhi < 0))
    {
        std::ostringstream msg;
        msg << "no sign change of the RSS difference on [" << lo << ", " << hi
            << "] m";
        throw NoBoundaryError(msg.str());
    }
    for (int i = 0; i < kMaxBisections && hi - lo > kRootWidth; ++i)
    {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if (fmid == 0)
            return mid;
        if ((fmid < 0) == (flo < 0))
        {
            lo = mid;
            flo = fmid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}
}  // namespace

//---------------------------------------------------------------------------//
double PathLossLaw::at_km(double distance_km) const
{
    return intercept_db + slope_db * std::log10(distance_km);
}

RadioScenario RadioScenario::lte_hetnet(double macro_pico_distance_m)
{
    RadioScenario s;
    s.macro = {46.0, 14.0, {128.1, 37.6}};
    s.pico = {30.0, 5.0, {140.7, 36.7}};
    s.min_pathloss_db = 35.0;
    s.macro_pico_distance_m = macro_pico_distance_m;
    return s;
}

void RadioScenario::validate() const
{
    if (!(macro_pico_distance_m > 0))
        throw DomainError("macro_pico_distance must be positive");
    if (!(macro.pathloss.slope_db > 0) || !(pico.pathloss.slope_db > 0))
        throw DomainError("path-loss slopes must be positive");
    if (!(min_pathloss_db >= 0))
        throw DomainError("min_pathloss must be non-negative");
}

double rss_at(RadioScenario const& scenario, Cell cell, double distance_m)
{
    if (!(distance_m > 0))
        throw DomainError("rss_at: distance must be positive");
    RadioLink const& link = cell == Cell::macro ? scenario.macro : scenario.pico;
    double pl = std::max(link.pathloss.at_km(distance_m / 1000.0),
                         scenario.min_pathloss_db);
    return link.tx_power_dbm + link.antenna_gain_dbi - pl;
}

double rss_diff_at(RadioScenario const& scenario, double x_m)
{
    double to_pico = std::abs(scenario.macro_pico_distance_m - x_m);
    return rss_at(scenario, Cell::pico, to_pico)
           - rss_at(scenario, Cell::macro, x_m);
}

//---------------------------------------------------------------------------//
BoundaryPair boundary_distances(RadioScenario const& scenario, double rss_diff_db)
{
    scenario.validate();
    double const d = scenario.macro_pico_distance_m;
    auto residual = [&](double x) {
        return rss_diff_at(scenario, x) - rss_diff_db;
    };
    BoundaryPair result;
    result.m2p = bisect(residual, kSiteMargin, d - kSiteMargin);
    result.p2m = bisect(residual, d + kSiteMargin, 10 * d);
    return result;
}

double circle_radius(RadioScenario const& scenario, double rss_diff_db)
{
    auto b = boundary_distances(scenario, rss_diff_db);
    return 0.5 * (b.p2m - b.m2p);
}

double ho_region_size(RadioScenario const& scenario,
                      double trigger_diff_db,
                      double outage_diff_db)
{
    if (!(outage_diff_db > trigger_diff_db))
        throw DomainError("ho_region_size: outage threshold must exceed trigger");
    return boundary_distances(scenario, outage_diff_db).m2p
           - boundary_distances(scenario, trigger_diff_db).m2p;
}

//---------------------------------------------------------------------------//
void HoOffsets::validate() const
{
    bool ordered = qin_in_db > hoe_in_db && hoe_in_db > hom_in_db
                   && hom_in_db > 0 && 0 > hom_out_db && hom_out_db > hoe_out_db
                   && hoe_out_db > qin_out_db;
    if (!ordered)
    {
        std::ostringstream msg;
        msg << "offsets must satisfy qin_in > hoe_in > hom_in > 0 > hom_out > "
               "hoe_out > qin_out, got "
            << qin_in_db << ", " << hoe_in_db << ", " << hom_in_db << ", "
            << hom_out_db << ", " << hoe_out_db << ", " << qin_out_db;
        throw InconsistentOffsetsError(msg.str());
    }
}

void CircleSet::validate() const
{
    bool ordered = 0 < r_m && r_m < r_me && r_me < r_mp && r_mp < big_r
                   && big_r < r_pp && r_pp < r_pe && r_pe < r_p
                   && r_thresh > 0;
    if (!ordered)
    {
        throw InconsistentOffsetsError(
            "circle radii must satisfy 0 < r_m < r_me < r_mp < R < r_pp < "
            "r_pe < r_p");
    }
}

CircleSet build_circle_set(RadioScenario const& scenario, HoOffsets const& offsets)
{
    offsets.validate();
    CircleSet c;
    c.r_p = circle_radius(scenario, offsets.qin_out_db);
    c.r_pe = circle_radius(scenario, offsets.hoe_out_db);
    c.r_pp = circle_radius(scenario, offsets.hom_out_db);
    c.big_r = circle_radius(scenario, 0.0);
    c.r_mp = circle_radius(scenario, offsets.hom_in_db);
    c.r_me = circle_radius(scenario, offsets.hoe_in_db);
    c.r_m = circle_radius(scenario, offsets.qin_in_db);
    c.r_thresh = c.big_r;
    c.validate();
    return c;
}

}  // namespace hetho
