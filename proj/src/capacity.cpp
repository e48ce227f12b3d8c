#include <netrel/capacity.hpp>

#include <string>

namespace netrel {

namespace {

CapacitySpectrum finish(std::size_t min_cut, std::vector<Poly> levels)
{
    CapacitySpectrum out;
    out.min_cut = min_cut;
    for (std::size_t i = 1; i < levels.size(); ++i)
        out.ergodic += levels[i] * Rational(i);
    out.levels = std::move(levels);
    return out;
}

} // namespace

std::vector<std::uint8_t> capacity_table(const Network& net, const Budget& budget)
{
    const auto n = net.edge_count();
    if (!budget.allows_power_of_two(n))
        throw Error(ErrorCode::TooManyEdges, "2^" + std::to_string(n) +
                                                 " link states exceed the budget of " +
                                                 std::to_string(budget.max_terms));
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask)
        table[mask] = static_cast<std::uint8_t>(max_flow(net, EdgeSet(mask)));
    return table;
}

CapacitySpectrum capacity_spectrum(const Network& net, const CutFamily& cuts, const Budget& budget)
{
    const auto n = net.edge_count();
    const auto m = cuts.min_cut;
    const auto table = capacity_table(net, budget);

    // tally[i][k]: states with capacity i and k failed links.
    std::vector<std::vector<std::uint64_t>> tally(m + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        if (table[mask] > m)
            throw Error(ErrorCode::Internal, "residual capacity exceeds the min-cut size");
        ++tally[table[mask]][n - EdgeSet(mask).size()];
    }

    std::vector<Poly> levels(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t k = 0; k <= n; ++k)
            if (tally[i][k] != 0)
                levels[i] += bernoulli_term<Rational>(k, n - k) * Rational(tally[i][k]);
    return finish(m, std::move(levels));
}

Poly survival_tail(std::size_t at_least, std::size_t links)
{
    Poly out;
    BigInt binom = 1; // C(links, j), updated incrementally
    for (std::size_t j = 0; j <= links; ++j) {
        if (j > 0)
            binom = binom * (links - j + 1) / j;
        if (j >= at_least)
            out += bernoulli_term<Rational>(links - j, j) * Rational(binom);
    }
    return out;
}

CapacitySpectrum capacity_spectrum_disjoint(std::span<const EdgeSet> minimal_cuts, std::size_t edge_count)
{
    EdgeSet seen;
    std::size_t m = minimal_cuts.empty() ? 0 : edge_count;
    for (auto cut : minimal_cuts) {
        if (cut.intersects(seen))
            throw Error(ErrorCode::CutsNotDisjoint, "minimal cut-sets share an edge");
        seen = seen | cut;
        m = std::min(m, cut.size());
    }

    // at_least[i] = P(capacity >= i) = prod over cuts of q(i, |C|, p).
    std::vector<Poly> at_least(m + 2);
    for (std::size_t i = 0; i <= m + 1; ++i) {
        auto prod = Poly::constant(Rational(1));
        for (auto cut : minimal_cuts)
            prod *= survival_tail(i, cut.size());
        at_least[i] = std::move(prod);
    }
    std::vector<Poly> levels(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        levels[i] = at_least[i] - at_least[i + 1];
    return finish(m, std::move(levels));
}

} // namespace netrel
