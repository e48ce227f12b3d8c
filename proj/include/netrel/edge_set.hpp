#ifndef NETREL_EDGE_SET_HPP
#define NETREL_EDGE_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace netrel {

// Largest edge count an EdgeSet can index.
inline constexpr std::size_t max_edges = 63;

/// A subset of edge indices 0..62 packed into one machine word.
///
/// Edge j corresponds to bit j, so the natural ordering of EdgeSets is the
/// numeric order of their masks with edge 0 as the least significant bit.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr EdgeSet full(std::size_t n)
    {
        return EdgeSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
    }

    static EdgeSet of(std::initializer_list<std::size_t> edges)
    {
        EdgeSet s;
        for (auto e : edges)
            s.insert(e);
        return s;
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

    constexpr bool contains(std::size_t edge) const noexcept { return (mask_ >> edge) & 1u; }
    constexpr void insert(std::size_t edge) noexcept { mask_ |= std::uint64_t{1} << edge; }
    constexpr void erase(std::size_t edge) noexcept { mask_ &= ~(std::uint64_t{1} << edge); }

    constexpr bool subset_of(EdgeSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(EdgeSet other) const noexcept { return (mask_ & other.mask_) != 0; }

    constexpr EdgeSet operator|(EdgeSet o) const noexcept { return EdgeSet(mask_ | o.mask_); }
    constexpr EdgeSet operator&(EdgeSet o) const noexcept { return EdgeSet(mask_ & o.mask_); }
    constexpr EdgeSet minus(EdgeSet o) const noexcept { return EdgeSet(mask_ & ~o.mask_); }

    // Members in ascending index order.
    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (auto m = mask_; m != 0; m &= m - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    template <class F>
    constexpr void for_each(F&& f) const
    {
        for (auto m = mask_; m != 0; m &= m - 1)
            f(static_cast<std::size_t>(std::countr_zero(m)));
    }

    friend constexpr bool operator==(EdgeSet, EdgeSet) = default;
    friend constexpr auto operator<=>(EdgeSet a, EdgeSet b) { return a.mask_ <=> b.mask_; }

private:
    std::uint64_t mask_ = 0;
};

} // namespace netrel

#endif
