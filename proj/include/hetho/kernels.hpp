#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace hetho::kernels
{
//---------------------------------------------------------------------------//
/*!
 * Per-point constants for the LTE counting kernel.
 *
 * Radii are squared; distances are the TTT and minimum-stay displacements.
 */
struct LteGeometry
{
    double r_m2{0};
    double r_mp2{0};
    double r_pp2{0};
    double r_p2{0};
    double inbound_ttt{0};   //!< v * T_m
    double outbound_ttt{0};  //!< v * T_p
    double min_stay{0};      //!< v * T_pp
};

struct ZeusGeometry
{
    double r_m2{0};
    double r_me2{0};
    double r_mp2{0};
    double r_pe2{0};
    double r_p2{0};
    double min_stay{0};
    bool suppressed{false};  //!< High-speed extension keeps the UE out
};

/*!
 * Outcome tallies over a batch of chords.
 *
 * The first five fields partition the batch. \c pue_hof and \c ping_pong
 * are sub-counts of \c handover.
 */
struct OutcomeCounts
{
    std::uint64_t pass_through{0};       //!< Never reaches the HOM/HOP circle
    std::uint64_t no_handover{0};        //!< Triggered or kept out, not executed
    std::uint64_t extra_preparation{0};  //!< Prepared, never executed (ZEUS)
    std::uint64_t mue_hof{0};
    std::uint64_t handover{0};
    std::uint64_t pue_hof{0};
    std::uint64_t ping_pong{0};

    std::uint64_t total() const
    {
        return pass_through + no_handover + extra_preparation + mue_hof
               + handover;
    }

    OutcomeCounts& operator+=(OutcomeCounts const& o);
    friend bool operator==(OutcomeCounts const&, OutcomeCounts const&) = default;
};

//! Chords are given by their squared perpendicular offset r^2
using LteKernel = void (*)(std::span<double const> r2,
                           LteGeometry const& g,
                           OutcomeCounts& counts);
using ZeusKernel = void (*)(std::span<double const> r2,
                            ZeusGeometry const& g,
                            OutcomeCounts& counts);

struct KernelTable
{
    LteKernel count_lte;
    ZeusKernel count_zeus;
};

enum class Isa
{
    scalar,
    avx2,
};

std::string_view to_string(Isa isa);

//! Compiled in and supported by the running CPU
bool isa_available(Isa isa);

Isa best_isa();

//! Throws DomainError when the ISA is unavailable
KernelTable const& kernel_table(Isa isa);

// Reference kernels; the vector variants must reproduce their counts exactly
void count_lte_scalar(std::span<double const> r2,
                      LteGeometry const& g,
                      OutcomeCounts& counts);
void count_zeus_scalar(std::span<double const> r2,
                       ZeusGeometry const& g,
                       OutcomeCounts& counts);

#if HETHO_HAVE_AVX2_KERNELS
void count_lte_avx2(std::span<double const> r2,
                    LteGeometry const& g,
                    OutcomeCounts& counts);
void count_zeus_avx2(std::span<double const> r2,
                     ZeusGeometry const& g,
                     OutcomeCounts& counts);
#endif

}  // namespace hetho::kernels
