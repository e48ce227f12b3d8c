#include <netrel/outage.hpp>

#include <algorithm>
#include <string>
#include <unordered_map>

namespace netrel {

std::size_t CutEnumerator::min_cut() const
{
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] != 0)
            return i;
    return 0;
}

std::uint64_t CutEnumerator::total() const
{
    std::uint64_t sum = 0;
    for (auto c : counts_)
        sum += c;
    return sum;
}

Poly CutEnumerator::as_polynomial() const
{
    std::vector<Rational> coeffs;
    coeffs.reserve(counts_.size());
    for (auto c : counts_)
        coeffs.emplace_back(c);
    return Poly(std::move(coeffs));
}

CutEnumerator cut_enumerator(const CutFamily& cuts)
{
    std::vector<std::uint64_t> counts(cuts.edge_count + 1, 0);
    for (auto cut : cuts.all_cuts)
        ++counts[cut.size()];
    return CutEnumerator(std::move(counts));
}

Poly outage_polynomial(const CutEnumerator& enumerator, std::size_t edge_count)
{
    Poly out;
    for (std::size_t i = 0; i <= edge_count; ++i)
        if (enumerator[i] != 0)
            out += bernoulli_term<Rational>(i, edge_count - i) * Rational(enumerator[i]);
    return out;
}

OutageBounds outage_bounds(const CutEnumerator& enumerator, std::span<const EdgeSet> minimal_cuts,
                           std::size_t edge_count)
{
    OutageBounds bounds;
    bounds.upper_all_cuts = enumerator.as_polynomial();
    for (auto cut : minimal_cuts)
        bounds.upper_minimal_cuts += Poly::monomial(Rational(1), cut.size());
    const auto m = enumerator.min_cut();
    bounds.lower = bernoulli_term<Rational>(m, edge_count - m) * Rational(enumerator[m]);
    return bounds;
}

AsymptoticSummary asymptotic_summary(const CutEnumerator& enumerator)
{
    const auto m = enumerator.min_cut();
    return {m, enumerator[m]};
}

std::vector<std::pair<EdgeSet, std::int64_t>> signed_unions(std::span<const EdgeSet> sets,
                                                             const Budget& budget,
                                                             ErrorCode overflow)
{
    if (!budget.allows_power_of_two(sets.size()))
        throw Error(overflow, "2^" + std::to_string(sets.size()) +
                                  " inclusion-exclusion terms exceed the budget of " +
                                  std::to_string(budget.max_terms));

    // Depth-first over subsets; odd-sized subsets add, even-sized subtract.
    std::unordered_map<std::uint64_t, std::int64_t> tally;
    struct Frame {
        std::size_t next;
        EdgeSet acc;
        std::int64_t sign;
    };
    std::vector<Frame> stack;
    for (std::size_t i = 0; i < sets.size(); ++i)
        stack.push_back({i + 1, sets[i], 1});
    while (!stack.empty()) {
        auto [next, acc, sign] = stack.back();
        stack.pop_back();
        tally[acc.mask()] += sign;
        for (std::size_t i = next; i < sets.size(); ++i)
            stack.push_back({i + 1, acc | sets[i], -sign});
    }

    std::vector<std::pair<EdgeSet, std::int64_t>> out;
    out.reserve(tally.size());
    for (const auto& [mask, count] : tally)
        if (count != 0)
            out.emplace_back(EdgeSet(mask), count);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace netrel
