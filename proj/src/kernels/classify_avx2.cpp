// Built with -mavx2 only; reached through kernel_table() after a CPU check.
#include <immintrin.h>

#include <bit>
#include <cstddef>

#include "hetho/kernels.hpp"

namespace hetho::kernels
{
namespace
{
constexpr std::size_t kLanes = 4;

inline std::uint64_t popcount(__m256d mask)
{
    return static_cast<std::uint64_t>(
        std::popcount(static_cast<unsigned>(_mm256_movemask_pd(mask))));
}

inline __m256d lt(__m256d a, __m256d b)
{
    return _mm256_cmp_pd(a, b, _CMP_LT_OQ);
}

inline __m256d gt(__m256d a, __m256d b)
{
    return _mm256_cmp_pd(a, b, _CMP_GT_OQ);
}

//! sqrt(c - q) on lanes where c > q, zero elsewhere (those lanes are masked)
inline __m256d half_chord(__m256d c, __m256d q)
{
    return _mm256_sqrt_pd(_mm256_max_pd(_mm256_sub_pd(c, q), _mm256_setzero_pd()));
}
}  // namespace

void count_lte_avx2(std::span<double const> r2,
                    LteGeometry const& g,
                    OutcomeCounts& counts)
{
    __m256d const r_m2 = _mm256_set1_pd(g.r_m2);
    __m256d const r_mp2 = _mm256_set1_pd(g.r_mp2);
    __m256d const r_pp2 = _mm256_set1_pd(g.r_pp2);
    __m256d const r_p2 = _mm256_set1_pd(g.r_p2);
    __m256d const in_ttt = _mm256_set1_pd(g.inbound_ttt);
    __m256d const out_ttt = _mm256_set1_pd(g.outbound_ttt);
    __m256d const stay = _mm256_set1_pd(g.min_stay);
    __m256d const two = _mm256_set1_pd(2.0);

    std::uint64_t pass = 0, nho = 0, mue = 0, ho = 0, pue = 0, pp = 0;
    std::size_t const n = r2.size();
    std::size_t const body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes)
    {
        __m256d const q = _mm256_loadu_pd(r2.data() + i);
        __m256d const in_mp = lt(q, r_mp2);
        __m256d const h_mp = half_chord(r_mp2, q);
        __m256d const h_m = half_chord(r_m2, q);

        __m256d hof = _mm256_and_pd(lt(q, r_m2), gt(in_ttt, _mm256_sub_pd(h_mp, h_m)));
        hof = _mm256_and_pd(hof, in_mp);
        __m256d const live = _mm256_andnot_pd(hof, in_mp);
        __m256d const early_exit = _mm256_and_pd(live, gt(in_ttt, _mm256_mul_pd(two, h_mp)));
        __m256d const exec = _mm256_andnot_pd(early_exit, live);

        __m256d const h_pp = half_chord(r_pp2, q);
        __m256d const h_p = half_chord(r_p2, q);
        __m256d const out_fail
            = _mm256_and_pd(exec, gt(_mm256_add_pd(h_pp, out_ttt), h_p));
        __m256d const tos = _mm256_add_pd(
            _mm256_sub_pd(_mm256_add_pd(h_mp, h_pp), in_ttt), out_ttt);
        __m256d const bounce = _mm256_and_pd(exec, lt(tos, stay));

        pass += kLanes - popcount(in_mp);
        mue += popcount(hof);
        nho += popcount(early_exit);
        ho += popcount(exec);
        pue += popcount(out_fail);
        pp += popcount(bounce);
    }
    counts.pass_through += pass;
    counts.no_handover += nho;
    counts.mue_hof += mue;
    counts.handover += ho;
    counts.pue_hof += pue;
    counts.ping_pong += pp;
    count_lte_scalar(r2.subspan(body), g, counts);
}

void count_zeus_avx2(std::span<double const> r2,
                     ZeusGeometry const& g,
                     OutcomeCounts& counts)
{
    if (g.suppressed)
    {
        count_zeus_scalar(r2, g, counts);
        return;
    }
    __m256d const r_m2 = _mm256_set1_pd(g.r_m2);
    __m256d const r_me2 = _mm256_set1_pd(g.r_me2);
    __m256d const r_mp2 = _mm256_set1_pd(g.r_mp2);
    __m256d const r_pe2 = _mm256_set1_pd(g.r_pe2);
    __m256d const r_p2 = _mm256_set1_pd(g.r_p2);
    __m256d const stay = _mm256_set1_pd(g.min_stay);

    std::uint64_t pass = 0, ehop = 0, mue = 0, ho = 0, pue = 0, pp = 0;
    std::size_t const n = r2.size();
    std::size_t const body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes)
    {
        __m256d const q = _mm256_loadu_pd(r2.data() + i);
        __m256d const in_mp = lt(q, r_mp2);
        __m256d const in_me = lt(q, r_me2);
        __m256d const h_me = half_chord(r_me2, q);
        __m256d const h_m = half_chord(r_m2, q);

        __m256d const prepared_only = _mm256_andnot_pd(in_me, in_mp);
        __m256d const hof
            = _mm256_and_pd(_mm256_and_pd(in_me, lt(q, r_m2)), gt(h_m, h_me));
        __m256d const exec = _mm256_andnot_pd(hof, in_me);

        __m256d const h_pe = half_chord(r_pe2, q);
        __m256d const h_p = half_chord(r_p2, q);
        __m256d const out_fail = _mm256_and_pd(exec, gt(h_pe, h_p));
        __m256d const bounce
            = _mm256_and_pd(exec, lt(_mm256_add_pd(h_me, h_pe), stay));

        pass += kLanes - popcount(in_mp);
        ehop += popcount(prepared_only);
        mue += popcount(hof);
        ho += popcount(exec);
        pue += popcount(out_fail);
        pp += popcount(bounce);
    }
    counts.pass_through += pass;
    counts.extra_preparation += ehop;
    counts.mue_hof += mue;
    counts.handover += ho;
    counts.pue_hof += pue;
    counts.ping_pong += pp;
    count_zeus_scalar(r2.subspan(body), g, counts);
}

}  // namespace hetho::kernels
