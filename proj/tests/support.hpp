#pragma once

#include "hetho/linkbudget.hpp"
#include "hetho/mobility.hpp"

namespace hetho::test
{
//! Default offsets (HOM 2, HOE 3, Q_in 6/-4 dB) at the given distance
inline CircleSet circles_at(double distance_m)
{
    return build_circle_set(RadioScenario::lte_hetnet(distance_m), HoOffsets{});
}

inline CircleSet circles_with(double distance_m, double hom_db, double hoe_db)
{
    HoOffsets o;
    o.hom_in_db = hom_db;
    o.hom_out_db = -hom_db;
    o.hoe_in_db = hoe_db;
    o.hoe_out_db = -hoe_db;
    return build_circle_set(RadioScenario::lte_hetnet(distance_m), o);
}

inline MobilityParams mobility(double v_kmh, double ttt_ms = 480, double t_pp_s = 1.0)
{
    MobilityParams m;
    m.speed = Speed::from_kmh(v_kmh);
    m.t_m_s = ttt_ms / 1000;
    m.t_p_s = ttt_ms / 1000;
    m.t_pp_s = t_pp_s;
    return m;
}

//! Root of a monotone f on [lo, hi] by plain bisection
template<class F>
double bisect(F&& f, double lo, double hi)
{
    bool const rising = f(hi) > f(lo);
    for (int i = 0; i < 200; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        if ((f(mid) > 0) == rising)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}
}  // namespace hetho::test
