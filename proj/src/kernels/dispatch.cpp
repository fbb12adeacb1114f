#include "hetho/error.hpp"
#include "hetho/kernels.hpp"

namespace hetho::kernels
{
namespace
{
constexpr KernelTable kScalarTable{&count_lte_scalar, &count_zeus_scalar};
#if HETHO_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{&count_lte_avx2, &count_zeus_avx2};
#endif
}  // namespace

std::string_view to_string(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa)
{
    switch (isa)
    {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if HETHO_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa best_isa()
{
    static Isa const best = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    return best;
}

KernelTable const& kernel_table(Isa isa)
{
    if (!isa_available(isa))
        throw DomainError("kernel ISA not available: " + std::string(to_string(isa)));
#if HETHO_HAVE_AVX2_KERNELS
    if (isa == Isa::avx2)
        return kAvx2Table;
#endif
    return kScalarTable;
}

}  // namespace hetho::kernels
