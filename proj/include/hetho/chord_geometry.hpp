#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace hetho
{
/*!
 * A straight UE trajectory through the pico coverage disc.
 *
 * \c r is the perpendicular distance from the pico site, \c d the chord
 * length 2*sqrt(R^2 - r^2) and \c alpha the trajectory angle with
 * d = 2R cos(alpha).
 */
struct Chord
{
    double r{0};
    double d{0};
    double alpha{0};
};

//! Chord with trajectory angle alpha in [0, pi/2] through a disc of radius R
Chord chord_from_angle(double alpha, double big_r);

//! Density of the perpendicular distance: 2 / (pi sqrt(R^2 - r^2))
double chord_pdf(double r, double big_r);

//! Cumulative distribution of r: (2/pi) asin(r/R)
double chord_cdf(double r, double big_r);

//! Probability that the chord length falls in (d1, d2)
double prob_chord_between(double d1, double d2, double big_r);

//! Chord length of a trajectory at perpendicular distance r
double chord_length(double r, double big_r);

//! Perpendicular distance of a chord of length d
double chord_offset(double d, double big_r);

/*!
 * Distance from the chord midpoint to where it crosses a concentric circle
 * of radius c, sqrt(c^2 - r^2). Empty when the chord misses the circle.
 */
std::optional<double> crossing_half_distance(double c, double r);

//---------------------------------------------------------------------------//
/*!
 * Independent random chord stream.
 *
 * Trajectory angles are uniform on [0, pi/2] and r = R sin(alpha), which
 * realizes the chord_pdf density exactly. Each sampler owns its engine, so
 * parallel workers construct their own from distinct (seed, stream) pairs.
 */
class ChordSampler
{
  public:
    ChordSampler(std::uint64_t seed, std::uint64_t stream = 0);

    Chord operator()(double big_r);

    //! Uniform double in [0, 1) from the top 53 bits of one engine draw
    double uniform();

  private:
    std::mt19937_64 engine_;
};

}  // namespace hetho
