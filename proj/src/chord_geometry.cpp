#include "hetho/chord_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hetho/error.hpp"

namespace hetho
{
namespace
{
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
}

Chord chord_from_angle(double alpha, double big_r)
{
    if (!(alpha >= 0 && alpha <= std::numbers::pi / 2))
        throw DomainError("chord_from_angle: alpha outside [0, pi/2]");
    Chord c;
    c.alpha = alpha;
    c.r = big_r * std::sin(alpha);
    c.d = 2 * big_r * std::cos(alpha);
    return c;
}

double chord_pdf(double r, double big_r)
{
    if (!(r >= 0 && r < big_r))
        throw DomainError("chord_pdf: r must lie in [0, R)");
    return kTwoOverPi / std::sqrt((big_r - r) * (big_r + r));
}

double chord_cdf(double r, double big_r)
{
    if (r <= 0)
        return 0;
    if (r >= big_r)
        return 1;
    return kTwoOverPi * std::asin(r / big_r);
}

double prob_chord_between(double d1, double d2, double big_r)
{
    if (!(big_r > 0))
        throw DomainError("prob_chord_between: R must be positive");
    if (!(d1 >= 0 && d1 <= d2 && d2 <= 2 * big_r))
        throw DomainError("prob_chord_between: need 0 <= d1 <= d2 <= 2R");
    // acos form: well conditioned near tangency (d -> 0)
    double p = kTwoOverPi
               * (std::acos(d1 / (2 * big_r)) - std::acos(d2 / (2 * big_r)));
    return std::clamp(p, 0.0, 1.0);
}

double chord_length(double r, double big_r)
{
    if (!(r >= 0 && r <= big_r))
        throw DomainError("chord_length: r must lie in [0, R]");
    return 2 * std::sqrt(big_r * big_r - r * r);
}

double chord_offset(double d, double big_r)
{
    if (!(d >= 0 && d <= 2 * big_r))
        throw DomainError("chord_offset: d must lie in [0, 2R]");
    double half = d / 2;
    return std::sqrt(std::max(0.0, big_r * big_r - half * half));
}

std::optional<double> crossing_half_distance(double c, double r)
{
    if (r > c)
        return std::nullopt;
    return std::sqrt(c * c - r * r);
}

//---------------------------------------------------------------------------//
ChordSampler::ChordSampler(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

double ChordSampler::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Chord ChordSampler::operator()(double big_r)
{
    return chord_from_angle(uniform() * (std::numbers::pi / 2), big_r);
}

}  // namespace hetho
