#ifndef NETREL_BUDGET_HPP
#define NETREL_BUDGET_HPP

#include <cstdint>

namespace netrel {

/// Cap on the number of terms or states any exponential scan may visit.
/// Exceeding it raises a budget error instead of truncating.
struct Budget {
    std::uint64_t max_terms = std::uint64_t{1} << 20;

    // True when 2^exponent terms fit.
    constexpr bool allows_power_of_two(std::uint64_t exponent) const noexcept
    {
        return exponent < 64 && (std::uint64_t{1} << exponent) <= max_terms;
    }
};

} // namespace netrel

#endif
