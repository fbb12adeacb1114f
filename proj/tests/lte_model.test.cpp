#include "hetho/lte_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hetho/chord_geometry.hpp"
#include "support.hpp"

namespace hetho
{
namespace test
{
namespace
{
constexpr double pi = std::numbers::pi;

double sq(double x)
{
    return x * x;
}

// Chord offset whose dwell inside r_mp equals the inbound TTT distance
double theta_oracle(CircleSet const& c, MobilityParams const& m)
{
    double const x = m.inbound_ttt_distance();
    double const r = bisect([&](double r) { return 2 * std::sqrt(sq(c.r_mp) - sq(r)) - x; },
                            0.0,
                            c.r_mp);
    return std::asin(r / c.big_r);
}

// PP mass from the trajectory geometry: offsets where the HO executes
// before the HOF circle, the dwell covers the TTT, and the stay is short
double pp_oracle(CircleSet const& c, MobilityParams const& m)
{
    double const x = m.inbound_ttt_distance();
    double const y = m.outbound_ttt_distance();
    auto half = [](double radius, double r) {
        return std::sqrt(std::max(0.0, sq(radius) - sq(r)));
    };

    // Executes unless the HOM dwell 2 h_mp is shorter than x: r below r_exec
    double r_exec = 0;
    if (x <= 2 * c.r_mp)
        r_exec = bisect([&](double r) { return 2 * half(c.r_mp, r) - x; }, 0.0, c.r_mp);
    // MUE HOF: r < r_m and h_mp - h_m < x, i.e. r below r_fail
    double r_fail = 0;
    if (x > c.r_mp - c.r_m)
    {
        r_fail = x >= std::sqrt(sq(c.r_mp) - sq(c.r_m))
                     ? c.r_m
                     : bisect([&](double r) { return half(c.r_mp, r) - half(c.r_m, r) - x; },
                              0.0,
                              c.r_m);
    }
    double const top = r_exec;
    if (!(top > r_fail))
        return 0;
    auto stay = [&](double r) {
        return half(c.r_mp, r) + half(c.r_pp, r) - x + y - m.min_stay_distance();
    };
    double lo = r_fail;
    if (stay(r_fail) >= 0)
    {
        if (stay(top) >= 0)
            return 0;
        lo = bisect(stay, r_fail, top);
    }
    return chord_cdf(top, c.big_r) - chord_cdf(lo, c.big_r);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(LteThetaTest, examples)
{
    auto const c = circles_at(250);
    // Worked values are quoted from two-decimal radii; 1e-3 covers that rounding
    EXPECT_NEAR(0.9418, theta_angle(c, mobility(120)).value(), 1e-3);
    EXPECT_NEAR(1.0766, theta_angle(c, mobility(0)).value(), 1e-3);
    EXPECT_NEAR(std::asin(c.r_mp / c.big_r), theta_angle(c, mobility(0)).value(), 1e-12);
    EXPECT_NEAR(1.0652, theta_angle(c, mobility(35)).value(), 1e-3);

    for (double v = 5; v <= 120; v += 5)
        EXPECT_NEAR(theta_oracle(c, mobility(v)), theta_angle(c, mobility(v)).value(), 1e-9);

    // Inbound TTT distance beyond the widest HOF-free dwell
    EXPECT_FALSE(theta_angle(c, mobility(300)));
}

TEST(LteNhoTest, examples)
{
    auto const c = circles_at(250);
    EXPECT_NEAR(0.4004, p_nho_lte(c, mobility(120)), 1e-3);
    EXPECT_NEAR(0.3146, p_nho_lte(c, mobility(0)), 1e-3);
    double const tangent = 1 - 2 / pi * std::atan(c.r_m / std::sqrt(sq(c.big_r) - sq(c.r_m)));
    EXPECT_NEAR(0.5216, p_nho_lte(c, mobility(500)), 1e-3);
    EXPECT_DOUBLE_EQ(tangent, p_nho_lte(c, mobility(500)));
}

//---------------------------------------------------------------------------//
TEST(LteMueHofTest, quoted_rates)
{
    auto const c = circles_at(250);
    EXPECT_NEAR(0.17, p_hof_mue_lte(c, mobility(35)).normalized, 0.01);
    EXPECT_NEAR(0.80, p_hof_mue_lte(c, mobility(120)).normalized, 0.01);
    // vT_m = 0.67 m is inside the HOM-to-HOF gap
    EXPECT_EQ(0.0, p_hof_mue_lte(c, mobility(30, 80)).raw);
}

TEST(LtePueHofTest, delta)
{
    auto const c = circles_at(250);
    auto d = delta_angle(c, mobility(30));
    ASSERT_EQ(ChordAngle::Kind::angle, d.kind);
    EXPECT_NEAR(0.5565, d.value, 1e-3);

    // vT_p = 1.07 m < r_p - r_pp
    EXPECT_EQ(ChordAngle::Kind::none, delta_angle(c, mobility(8)).kind);
    EXPECT_EQ(ChordAngle::Kind::all, delta_angle(c, mobility(85)).kind);
}

TEST(LtePueHofTest, quoted_rates)
{
    auto const c = circles_at(250);
    auto const r30 = p_hof_pue_lte(c, mobility(30));
    EXPECT_NEAR(0.354, r30.raw, 5e-4);
    EXPECT_NEAR(0.52, r30.normalized, 0.01);
    EXPECT_NEAR(prob_chord_between(39.13, 46.08, 23.04), r30.raw, 2e-3);
    for (double v = 45; v <= 120; v += 5)
        EXPECT_GE(p_hof_pue_lte(c, mobility(v)).normalized, 0.99) << v;

    // No PUEs once the TTT outlasts every HOF-free dwell
    EXPECT_EQ(0.0, p_hof_pue_lte(c, mobility(300)).raw);
}

//---------------------------------------------------------------------------//
TEST(LtePpTest, quoted_rates)
{
    auto const c = circles_at(250);
    EXPECT_NEAR(0.03, p_pp_lte(c, mobility(85)).normalized, 0.01);
    EXPECT_NEAR(0.94, p_pp_lte(c, mobility(120)).normalized, 0.01);
    EXPECT_EQ(0.0, p_pp_lte(c, mobility(30)).raw);
}

TEST(LtePpTest, stay_band)
{
    auto const c = circles_at(250);
    auto const m = mobility(85);
    // PP band of offsets (19.37, 19.47) at 85 km/h
    EXPECT_LT(lte_stay_distance(c, m, 19.40), m.min_stay_distance());
    EXPECT_GT(lte_stay_distance(c, m, 19.30), m.min_stay_distance());
    EXPECT_NEAR(23.50, lte_stay_distance(c, m, 19.4), 0.02);
}

TEST(LtePpTest, geometric_oracle)
{
    for (double d : {75.0, 125.0, 250.0})
    {
        for (double ttt : {80.0, 160.0, 480.0})
        {
            for (double v = 1; v <= 150; v += 1)
            {
                auto const c = circles_at(d);
                auto const m = mobility(v, ttt);
                EXPECT_NEAR(pp_oracle(c, m), p_pp_lte(c, m).raw, 1e-9)
                    << "D=" << d << " ttt=" << ttt << " v=" << v;
            }
        }
    }
}

//---------------------------------------------------------------------------//
TEST(LtePropertyTest, partition)
{
    for (double d : {75.0, 125.0, 250.0})
    {
        auto const c = circles_at(d);
        for (double v = 1; v <= 150; v += 1)
        {
            auto const m = mobility(v);
            double const nho = p_nho_lte(c, m);
            double const hof = p_hof_mue_lte(c, m).raw;
            double const lo = lte_nho_chord(c, m);
            double const hi = lte_mue_hof_chord(c, m);
            double const ho = lo < hi ? prob_chord_between(lo, hi, c.big_r) : 0.0;
            EXPECT_NEAR(1.0, nho + hof + ho, 1e-9) << "D=" << d << " v=" << v;

            auto const rep = evaluate_lte(c, m);
            EXPECT_LE(rep.p_pp, 1 - rep.p_nho - rep.p_hof_mue + 1e-12);
            EXPECT_LE(rep.p_hof_pue, 1 - rep.p_nho - rep.p_hof_mue + 1e-12);
            for (double p : {rep.p_nho, rep.p_hof_mue, rep.p_hof_pue, rep.p_pp,
                             rep.p_hof_mue_norm, rep.p_hof_pue_norm, rep.p_pp_norm})
            {
                EXPECT_GE(p, 0);
                EXPECT_LE(p, 1);
            }
        }
    }
}

TEST(LtePropertyTest, seams)
{
    auto const c = circles_at(250);
    auto at_distance = [](double x) {
        // Speed that makes vT_m equal x
        MobilityParams m;
        m.speed = Speed::from_mps(x / m.t_m_s);
        return m;
    };
    // Branches meet with infinite slope, so compare a few ulps apart
    double const eps = 1e-14;
    double const gap = std::sqrt(sq(c.r_mp) - sq(c.r_m));
    for (double seam : {c.r_mp - c.r_m, gap})
    {
        EXPECT_NEAR(p_hof_mue_lte(c, at_distance(seam * (1 - eps))).raw,
                    p_hof_mue_lte(c, at_distance(seam * (1 + eps))).raw,
                    1e-6);
    }
    EXPECT_NEAR(p_nho_lte(c, at_distance(2 * gap * (1 - eps))),
                p_nho_lte(c, at_distance(2 * gap * (1 + eps))),
                1e-6);

    // Outbound seams of the PUE HOF angle
    auto at_outbound = [](double y) {
        MobilityParams m;
        m.speed = Speed::from_mps(1);
        m.t_m_s = 0;
        m.t_p_s = y;
        return m;
    };
    double const widest = std::sqrt(sq(c.r_p) - sq(c.big_r)) - std::sqrt(sq(c.r_pp) - sq(c.big_r));
    for (double seam : {c.r_p - c.r_pp, widest})
    {
        EXPECT_NEAR(p_hof_pue_lte(c, at_outbound(seam * (1 - eps))).raw,
                    p_hof_pue_lte(c, at_outbound(seam * (1 + eps))).raw,
                    1e-6);
    }

    // PP seams: shortest and longest possible stay
    auto at_stay = [](double s) {
        MobilityParams m;
        m.speed = Speed::from_mps(1);
        m.t_m_s = 0;
        m.t_p_s = 0;
        m.t_pp_s = s;
        return m;
    };
    for (double seam : {std::sqrt(sq(c.r_pp) - sq(c.r_mp)), c.r_mp + c.r_pp})
    {
        EXPECT_NEAR(p_pp_lte(c, at_stay(seam * (1 - eps))).raw, p_pp_lte(c, at_stay(seam * (1 + eps))).raw, 1e-6);
    }
}

TEST(LtePropertyTest, zero_speed)
{
    for (double d : {75.0, 125.0, 250.0})
    {
        auto const rep = evaluate_lte(circles_at(d), mobility(0));
        EXPECT_EQ(0.0, rep.p_hof_mue);
        EXPECT_EQ(0.0, rep.p_hof_pue);
        EXPECT_EQ(0.0, rep.p_pp);
    }
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace hetho
