#include <netrel/enumerate.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace netrel {

namespace {

struct PathWalker {
    const Network& net;
    const Budget& budget;
    std::vector<char> on_path;
    std::vector<EdgeSet> found;

    void walk(std::size_t node, EdgeSet used)
    {
        if (node == net.terminal()) {
            if (found.size() >= budget.max_terms)
                throw Error(ErrorCode::PathBudgetExceeded,
                            "more than " + std::to_string(budget.max_terms) + " paths");
            found.push_back(used);
            return;
        }
        on_path[node] = 1;
        for (auto j : net.out_edges(node)) {
            auto next = net.edge(j).head;
            if (on_path[next])
                continue;
            auto extended = used;
            extended.insert(j);
            walk(next, extended);
        }
        on_path[node] = 0;
    }
};

} // namespace

PathSet enumerate_paths(const Network& net, const Budget& budget)
{
    PathWalker walker{net, budget, std::vector<char>(net.node_count(), 0), {}};
    walker.walk(net.source(), EdgeSet{});
    std::sort(walker.found.begin(), walker.found.end());
    return PathSet{std::move(walker.found)};
}

CutFamily enumerate_cutsets(const Network& net, const Budget& budget)
{
    const auto n = net.edge_count();
    if (!budget.allows_power_of_two(n))
        throw Error(ErrorCode::TooManyEdges, "2^" + std::to_string(n) +
                                                 " edge subsets exceed the budget of " +
                                                 std::to_string(budget.max_terms));
    CutFamily family;
    family.edge_count = n;
    const auto all = net.all_edges();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        EdgeSet cut(mask);
        if (!net.connected(all.minus(cut)))
            family.all_cuts.push_back(cut);
    }

    // Cut-sets are closed under supersets, so a cut is minimal exactly when
    // dropping any one of its edges restores connectivity.
    for (auto cut : family.all_cuts) {
        bool minimal = true;
        cut.for_each([&](std::size_t j) {
            if (minimal) {
                auto smaller = cut;
                smaller.erase(j);
                if (is_cut(net, smaller))
                    minimal = false;
            }
        });
        if (minimal)
            family.minimal_cuts.push_back(cut);
    }

    family.min_cut = min_cut_size(net);
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (auto cut : family.minimal_cuts) {
        smallest = std::min(smallest, cut.size());
        if (cut.size() == family.min_cut)
            family.minimum_cuts.push_back(cut);
    }
    if (smallest != family.min_cut)
        throw Error(ErrorCode::Internal, "max-flow value " + std::to_string(family.min_cut) +
                                             " differs from smallest cut size " +
                                             std::to_string(smallest));
    return family;
}

std::size_t max_flow(const Network& net, EdgeSet surviving)
{
    const auto nodes = net.node_count();
    std::vector<char> saturated(net.edge_count(), 0);
    // parent_edge[v] encodes the edge used to reach v: +j+1 forward, -(j+1) backward.
    std::vector<long> parent_edge(nodes);
    std::vector<char> seen(nodes);
    std::vector<std::size_t> queue;
    queue.reserve(nodes);

    std::size_t flow = 0;
    for (;;) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        queue.push_back(net.source());
        seen[net.source()] = 1;
        for (std::size_t head = 0; head < queue.size() && !seen[net.terminal()]; ++head) {
            auto v = queue[head];
            for (auto j : net.out_edges(v)) {
                auto w = net.edge(j).head;
                if (!seen[w] && surviving.contains(j) && !saturated[j]) {
                    seen[w] = 1;
                    parent_edge[w] = static_cast<long>(j) + 1;
                    queue.push_back(w);
                }
            }
            for (auto j : net.in_edges(v)) {
                auto w = net.edge(j).tail;
                if (!seen[w] && saturated[j]) {
                    seen[w] = 1;
                    parent_edge[w] = -(static_cast<long>(j) + 1);
                    queue.push_back(w);
                }
            }
        }
        if (!seen[net.terminal()])
            return flow;
        for (auto v = net.terminal(); v != net.source();) {
            auto code = parent_edge[v];
            if (code > 0) {
                auto j = static_cast<std::size_t>(code - 1);
                saturated[j] = 1;
                v = net.edge(j).tail;
            } else {
                auto j = static_cast<std::size_t>(-code - 1);
                saturated[j] = 0;
                v = net.edge(j).head;
            }
        }
        ++flow;
    }
}

} // namespace netrel
