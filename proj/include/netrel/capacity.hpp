#ifndef NETREL_CAPACITY_HPP
#define NETREL_CAPACITY_HPP

#include <netrel/budget.hpp>
#include <netrel/correlated.hpp>
#include <netrel/enumerate.hpp>
#include <netrel/polynomial.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace netrel {

/// Distribution of the instantaneous unit-capacity max-flow under uniform
/// link outage probability p.
struct CapacitySpectrum {
    std::size_t min_cut = 0;
    std::vector<Poly> levels; // levels[i] = C_i(p) = P(capacity == i), i = 0..min_cut
    Poly ergodic;             // E[C](p) = sum_i i * C_i(p)
};

/// Max-flow of the residual network formed by the surviving edges.
inline std::size_t instantaneous_capacity(const Network& net, EdgeSet surviving)
{
    return max_flow(net, surviving);
}

/// Capacity of every residual network, indexed by surviving-edge mask.
/// Throws TooManyEdges when 2^n exceeds the budget.
std::vector<std::uint8_t> capacity_table(const Network& net, const Budget& budget = {});

/// General method: exact scan of all 2^n link states with one max-flow each.
CapacitySpectrum capacity_spectrum(const Network& net, const CutFamily& cuts, const Budget& budget = {});

/// q(i, c, p): probability that at least i of c links survive.
Poly survival_tail(std::size_t at_least, std::size_t links);

/// Product form valid when the minimal cuts are pairwise disjoint: the
/// capacity is then the minimum over independent per-cut survivor counts.
/// Throws CutsNotDisjoint otherwise.
CapacitySpectrum capacity_spectrum_disjoint(std::span<const EdgeSet> minimal_cuts, std::size_t edge_count);

/// P(capacity == i) for i = 0..max capacity, where `failed_probability`
/// gives the probability of each exact failed-edge set.
template <class T, class StateProbability>
std::vector<T> capacity_distribution(const Network& net, std::size_t min_cut,
                                     StateProbability&& failed_probability, const Budget& budget = {})
{
    const auto table = capacity_table(net, budget);
    const auto all = net.all_edges();
    std::vector<T> out(min_cut + 1, T(0));
    for (std::uint64_t mask = 0; mask < table.size(); ++mask)
        out[table[mask]] += failed_probability(all.minus(EdgeSet(mask)));
    return out;
}

/// Capacity distribution with independent per-link outage probabilities.
template <class T>
std::vector<T> capacity_distribution(const Network& net, std::size_t min_cut, std::span<const T> probs,
                                     const Budget& budget = {})
{
    return capacity_distribution<T>(
        net, min_cut,
        [&](EdgeSet failed) {
            T w(1);
            for (std::size_t j = 0; j < probs.size(); ++j)
                w *= failed.contains(j) ? probs[j] : T(1) - probs[j];
            return w;
        },
        budget);
}

/// Capacity distribution under the block-correlation model.
template <class T>
std::vector<T> capacity_distribution(const Network& net, std::size_t min_cut,
                                     std::span<const EdgeSet> blocks, const T& p, const T& rho,
                                     const Budget& budget = {})
{
    validate_partition(blocks, net.edge_count());
    return capacity_distribution<T>(
        net, min_cut, [&](EdgeSet failed) { return correlated_state_probability(failed, blocks, p, rho); },
        budget);
}

template <class T>
T expected_capacity(const std::vector<T>& distribution)
{
    T out(0);
    for (std::size_t i = 1; i < distribution.size(); ++i)
        out += T(static_cast<long long>(i)) * distribution[i];
    return out;
}

} // namespace netrel

#endif
