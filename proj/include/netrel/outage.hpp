#ifndef NETREL_OUTAGE_HPP
#define NETREL_OUTAGE_HPP

#include <netrel/budget.hpp>
#include <netrel/enumerate.hpp>
#include <netrel/polynomial.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netrel {

/// Cut enumerator A(x): counts()[i] is the number of cut-sets of size i,
/// for i = 0..n.
class CutEnumerator {
public:
    explicit CutEnumerator(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t operator[](std::size_t size) const { return size < counts_.size() ? counts_[size] : 0; }
    std::size_t edge_count() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }

    // Smallest size with a nonzero count.
    std::size_t min_cut() const;
    std::uint64_t total() const;

    Poly as_polynomial() const;

private:
    std::vector<std::uint64_t> counts_;
};

CutEnumerator cut_enumerator(const CutFamily& cuts);

/// O(p) = sum_i A_i p^i (1-p)^(n-i) for a common link outage probability p.
Poly outage_polynomial(const CutEnumerator& enumerator, std::size_t edge_count);
inline Poly outage_polynomial(const CutFamily& cuts)
{
    return outage_polynomial(cut_enumerator(cuts), cuts.edge_count);
}

struct OutageBounds {
    Poly upper_all_cuts;     // sum_i A_i p^i
    Poly upper_minimal_cuts; // sum over minimal cuts of p^|C|
    Poly lower;              // A_m p^m (1-p)^(n-m)
};

OutageBounds outage_bounds(const CutEnumerator& enumerator, std::span<const EdgeSet> minimal_cuts,
                           std::size_t edge_count);

/// High-SNR behaviour O(p) ~ coding_gain * p^diversity_order.
struct AsymptoticSummary {
    std::size_t diversity_order = 0;
    std::uint64_t coding_gain = 0;

    friend bool operator==(const AsymptoticSummary&, const AsymptoticSummary&) = default;
};

AsymptoticSummary asymptotic_summary(const CutEnumerator& enumerator);

/// Inclusion-exclusion over the union of the events "every edge of set i
/// is in state X". Terms sharing the same union of edges are merged; the
/// result pairs each distinct union with its net signed multiplicity, in
/// ascending mask order. Throws `overflow` when 2^|sets| exceeds the budget.
std::vector<std::pair<EdgeSet, std::int64_t>> signed_unions(std::span<const EdgeSet> sets,
                                                             const Budget& budget,
                                                             ErrorCode overflow);

namespace detail {

template <class Scalar>
Scalar product_failed(EdgeSet edges, std::span<const Scalar> probs)
{
    Scalar out(1);
    edges.for_each([&](std::size_t j) { out *= probs[j]; });
    return out;
}

template <class Scalar>
Scalar product_working(EdgeSet edges, std::span<const Scalar> probs)
{
    Scalar out(1);
    edges.for_each([&](std::size_t j) { out *= Scalar(1) - probs[j]; });
    return out;
}

} // namespace detail

/// 1 - P(at least one path has every link up), by inclusion-exclusion over
/// the g paths.
template <class Scalar>
Scalar outage_by_paths(const PathSet& paths, std::span<const Scalar> probs, const Budget& budget = {})
{
    Scalar connected(0);
    for (const auto& [edges, sign] : signed_unions(paths.paths, budget, ErrorCode::PathBudgetExceeded))
        connected += Scalar(static_cast<long long>(sign)) * detail::product_working(edges, probs);
    return Scalar(1) - connected;
}

/// P(at least one minimal cut has every link down), by inclusion-exclusion
/// over the minimal cuts.
template <class Scalar>
Scalar outage_by_cuts(std::span<const EdgeSet> minimal_cuts, std::span<const Scalar> probs,
                      const Budget& budget = {})
{
    Scalar outage(0);
    for (const auto& [edges, sign] : signed_unions(minimal_cuts, budget, ErrorCode::CutBudgetExceeded))
        outage += Scalar(static_cast<long long>(sign)) * detail::product_failed(edges, probs);
    return outage;
}

/// Sum over cut-sets C of P(exactly the links of C are down).
template <class Scalar>
Scalar outage_by_reliability_sum(const CutFamily& cuts, std::span<const Scalar> probs)
{
    const auto all = EdgeSet::full(cuts.edge_count);
    Scalar outage(0);
    for (auto cut : cuts.all_cuts)
        outage += detail::product_failed(cut, probs) * detail::product_working(all.minus(cut), probs);
    return outage;
}

} // namespace netrel

#endif
