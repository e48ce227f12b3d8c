#ifndef NETREL_ENUMERATE_HPP
#define NETREL_ENUMERATE_HPP

#include <netrel/budget.hpp>
#include <netrel/edge_set.hpp>
#include <netrel/network.hpp>

#include <cstddef>
#include <vector>

namespace netrel {

/// Every simple directed source-terminal path, as edge sets in ascending
/// mask order.
struct PathSet {
    std::vector<EdgeSet> paths;

    std::size_t count() const noexcept { return paths.size(); }
};

/// All cut-sets (K), the inclusion-minimal ones (L) and those of minimum
/// size (M). Each list is in ascending mask order; M is a subset of L,
/// which is a subset of K.
struct CutFamily {
    std::vector<EdgeSet> all_cuts;
    std::vector<EdgeSet> minimal_cuts;
    std::vector<EdgeSet> minimum_cuts;
    std::size_t min_cut = 0;
    std::size_t edge_count = 0;

    std::size_t count() const noexcept { return all_cuts.size(); }
};

/// Depth-first enumeration of source-terminal paths. Throws
/// PathBudgetExceeded if more than budget.max_terms paths exist.
PathSet enumerate_paths(const Network& net, const Budget& budget = {});

/// Scans all 2^n edge subsets. Throws TooManyEdges when 2^n exceeds the
/// budget.
CutFamily enumerate_cutsets(const Network& net, const Budget& budget = {});

/// Unit-capacity source-terminal max-flow over the surviving edges, by
/// shortest augmenting paths on the residual network.
std::size_t max_flow(const Network& net, EdgeSet surviving);

/// Size of a minimum cut-set, equal to max_flow over all edges.
inline std::size_t min_cut_size(const Network& net) { return max_flow(net, net.all_edges()); }

/// True when removing `cut` disconnects the terminal from the source.
inline bool is_cut(const Network& net, EdgeSet cut) { return !net.connected(net.all_edges().minus(cut)); }

} // namespace netrel

#endif
