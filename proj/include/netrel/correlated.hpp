#ifndef NETREL_CORRELATED_HPP
#define NETREL_CORRELATED_HPP

#include <netrel/enumerate.hpp>
#include <netrel/polynomial.hpp>

#include <map>
#include <span>
#include <vector>

namespace netrel {

/// Block-correlation channel model: edges are split into disjoint blocks;
/// with probability rho all links of a block share one outage state,
/// otherwise they fail independently. Every link fails with probability p.
struct CorrelationPartition {
    std::vector<EdgeSet> blocks;
    Rational rho{0};
};

/// Throws PartitionMismatch unless the blocks are nonempty, pairwise
/// disjoint and cover exactly edges 0..edge_count-1.
void validate_partition(std::span<const EdgeSet> blocks, std::size_t edge_count);

/// Throws PartitionMismatch for bad blocks, InvalidProbability for rho
/// outside [0,1].
void validate_partition(const CorrelationPartition& partition, std::size_t edge_count);

namespace detail {

template <class T>
T power(const T& base, std::size_t k)
{
    T out(1);
    for (std::size_t i = 0; i < k; ++i)
        out *= base;
    return out;
}

void check_block_count(std::size_t block_size, std::size_t failed);

} // namespace detail

/// Probability that a specific set of `failed` links out of a block of
/// `block_size` links is in outage (and the rest are not).
///
/// T may be a number type or Poly2 for the symbolic form.
template <class T>
T block_outage_weight(std::size_t block_size, std::size_t failed, const T& p, const T& rho)
{
    detail::check_block_count(block_size, failed);
    const T one(1);
    const T q = one - p;
    if (failed == 0)
        return rho * q + (one - rho) * detail::power(q, block_size);
    if (failed == block_size)
        return rho * p + (one - rho) * detail::power(p, block_size);
    return (one - rho) * detail::power(p, failed) * detail::power(q, block_size - failed);
}

/// Probability of the exact link state in which `failed` are down and every
/// other edge is up.
template <class T>
T correlated_state_probability(EdgeSet failed, std::span<const EdgeSet> blocks, const T& p,
                               const T& rho)
{
    T out(1);
    for (auto block : blocks)
        out *= block_outage_weight(block.size(), (failed & block).size(), p, rho);
    return out;
}

namespace detail {

// Groups cut-sets by their per-block failure counts; cuts with equal
// signatures contribute identical terms.
std::map<std::vector<std::size_t>, std::uint64_t> block_signatures(const CutFamily& cuts,
                                                                   std::span<const EdgeSet> blocks);

} // namespace detail

/// Network outage under the block model: the sum over all cut-sets of the
/// probability of exactly that cut being down.
template <class T>
T correlated_outage(const CutFamily& cuts, std::span<const EdgeSet> blocks, const T& p, const T& rho)
{
    validate_partition(blocks, cuts.edge_count);
    T total(0);
    for (const auto& [signature, multiplicity] : detail::block_signatures(cuts, blocks)) {
        T term(static_cast<long long>(multiplicity));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            term *= block_outage_weight(blocks[b].size(), signature[b], p, rho);
        total += term;
    }
    return total;
}

/// The same sum expanded symbolically in (p, rho).
Poly2 correlated_outage_poly(const CutFamily& cuts, std::span<const EdgeSet> blocks);

} // namespace netrel

#endif
