#pragma once

#include "linkbudget.hpp"
#include "lte_model.hpp"
#include "mobility.hpp"

namespace hetho
{
//---------------------------------------------------------------------------//
// ZEUS HANDOVER (early preparation at r_mp, execution at r_me / r_pe)
//---------------------------------------------------------------------------//
double p_nho_zeus(CircleSet const& c);

//! Chords that cross r_mp but miss r_me: prepared target never used
double p_ehop_zeus(CircleSet const& c);

//! Both HOF masses; zero whenever the circle ordering holds
struct HofPair
{
    double mue{0};
    double pue{0};
};
HofPair p_hof_zeus(CircleSet const& c);

/*!
 * Angle of the chord whose pico stay, from the r_me entry to the r_pe exit,
 * is exactly vT_pp.
 *
 * Returns \c none when even the tangent-to-r_me chord stays longer
 * (sqrt(r_pe^2 - r_me^2) > vT_pp) and \c all when even the diameter stays
 * shorter (r_me + r_pe < vT_pp).
 */
ChordAngle phi_angle(CircleSet const& c, MobilityParams const& mob);

//! Pico stay distance sqrt(r_me^2-r^2) + sqrt(r_pe^2-r^2) for r <= r_me
double zeus_stay_distance(CircleSet const& c, double r);

RatePair p_pp_zeus(CircleSet const& c, MobilityParams const& mob);

//! Delay from the r_mp crossing (early HO CMD) to execution at r_me
double time_to_execute(CircleSet const& c, double r, Speed speed);

OutcomeReport evaluate_zeus(CircleSet const& c, MobilityParams const& mob);

//! Keep UEs with vT_pp > r_thresh out of the pico entirely
OutcomeReport apply_high_speed_ext(OutcomeReport report,
                                   CircleSet const& c,
                                   MobilityParams const& mob);

//! Dispatch on policy; zeus_ext uses c.r_thresh
OutcomeReport evaluate(Policy policy, CircleSet const& c, MobilityParams const& mob);

}  // namespace hetho
