#include "hetho/mobility.hpp"

#include <algorithm>

#include "hetho/error.hpp"

namespace hetho
{
void MobilityParams::validate() const
{
    if (!(v() >= 0))
        throw DomainError("speed must be non-negative");
    if (!(t_m_s >= 0) || !(t_p_s >= 0))
        throw DomainError("TTT values must be non-negative");
    if (!(t_pp_s > 0))
        throw DomainError("minimum time-of-stay must be positive");
}

std::string_view to_string(Policy p)
{
    switch (p)
    {
        case Policy::lte:
            return "lte";
        case Policy::zeus:
            return "zeus";
        case Policy::zeus_ext:
            return "zeus-ext";
    }
    return "?";
}

double normalized_rate(double num, double den)
{
    if (!(den > 1e-12))
        return 0;
    return std::clamp(num / den, 0.0, 1.0);
}

}  // namespace hetho
