#include <cmath>

#include "hetho/kernels.hpp"

namespace hetho::kernels
{
OutcomeCounts& OutcomeCounts::operator+=(OutcomeCounts const& o)
{
    pass_through += o.pass_through;
    no_handover += o.no_handover;
    extra_preparation += o.extra_preparation;
    mue_hof += o.mue_hof;
    handover += o.handover;
    pue_hof += o.pue_hof;
    ping_pong += o.ping_pong;
    return *this;
}

// Expression shapes here are mirrored operation-for-operation by the vector
// kernels so that every comparison rounds identically.

void count_lte_scalar(std::span<double const> r2,
                      LteGeometry const& g,
                      OutcomeCounts& counts)
{
    for (double const q : r2)
    {
        if (!(q < g.r_mp2))
        {
            ++counts.pass_through;
            continue;
        }
        double const h_mp = std::sqrt(g.r_mp2 - q);
        if (q < g.r_m2 && g.inbound_ttt > h_mp - std::sqrt(g.r_m2 - q))
        {
            ++counts.mue_hof;
            continue;
        }
        if (g.inbound_ttt > 2.0 * h_mp)
        {
            ++counts.no_handover;
            continue;
        }
        ++counts.handover;
        double const h_pp = std::sqrt(g.r_pp2 - q);
        double const h_p = std::sqrt(g.r_p2 - q);
        if (h_pp + g.outbound_ttt > h_p)
            ++counts.pue_hof;
        if (h_mp + h_pp - g.inbound_ttt + g.outbound_ttt < g.min_stay)
            ++counts.ping_pong;
    }
}

void count_zeus_scalar(std::span<double const> r2,
                       ZeusGeometry const& g,
                       OutcomeCounts& counts)
{
    for (double const q : r2)
    {
        if (!(q < g.r_mp2))
        {
            ++counts.pass_through;
            continue;
        }
        if (g.suppressed)
        {
            ++counts.no_handover;
            continue;
        }
        if (!(q < g.r_me2))
        {
            ++counts.extra_preparation;
            continue;
        }
        double const h_me = std::sqrt(g.r_me2 - q);
        // Inbound failure needs the HOF circle entry before the HOE entry
        if (q < g.r_m2 && std::sqrt(g.r_m2 - q) > h_me)
        {
            ++counts.mue_hof;
            continue;
        }
        ++counts.handover;
        double const h_pe = std::sqrt(g.r_pe2 - q);
        double const h_p = std::sqrt(g.r_p2 - q);
        if (h_pe > h_p)
            ++counts.pue_hof;
        if (h_me + h_pe < g.min_stay)
            ++counts.ping_pong;
    }
}

}  // namespace hetho::kernels
