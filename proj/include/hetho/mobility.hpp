#pragma once

#include <string_view>

namespace hetho
{
//! UE speed. Interfaces speak km/h; the models work in m/s.
class Speed
{
  public:
    constexpr Speed() = default;

    static constexpr Speed from_kmh(double kmh) { return Speed(kmh / 3.6); }
    static constexpr Speed from_mps(double mps) { return Speed(mps); }

    constexpr double mps() const { return mps_; }
    constexpr double kmh() const { return mps_ * 3.6; }

  private:
    constexpr explicit Speed(double mps) : mps_(mps) {}

    double mps_{0};
};

/*!
 * Trajectory speed and timers, all in SI units.
 */
struct MobilityParams
{
    Speed speed;
    double t_m_s{0.48};  //!< TTT macro -> pico
    double t_p_s{0.48};  //!< TTT pico -> macro
    double t_pp_s{1.0};  //!< Minimum time-of-stay before a return is not PP

    double v() const { return speed.mps(); }
    //! Distance covered during the inbound TTT
    double inbound_ttt_distance() const { return v() * t_m_s; }
    //! Distance covered during the outbound TTT
    double outbound_ttt_distance() const { return v() * t_p_s; }
    //! Distance covered during the minimum time-of-stay
    double min_stay_distance() const { return v() * t_pp_s; }

    //! Throws DomainError on a negative speed/timer or non-positive t_pp
    void validate() const;
};

enum class Policy
{
    lte,
    zeus,
    zeus_ext,
};

std::string_view to_string(Policy p);

/*!
 * Outcome probabilities for one (policy, circles, mobility) point.
 *
 * Raw values are masses over all chords through the coverage disc. The
 * normalized values divide by the population at risk: attempted handovers
 * for MUE HOF, executed handovers for PUE HOF and PP.
 */
struct OutcomeReport
{
    Policy policy{Policy::lte};
    double p_nho{0};
    double p_hof_mue{0};
    double p_hof_pue{0};
    double p_pp{0};
    double p_ehop{0};
    double p_hof_mue_norm{0};
    double p_hof_pue_norm{0};
    double p_pp_norm{0};
};

//! num/den clamped to [0,1]; zero when den is not above 1e-12
double normalized_rate(double num, double den);

}  // namespace hetho
