#ifndef NETREL_NETWORK_HPP
#define NETREL_NETWORK_HPP

#include <netrel/edge_set.hpp>
#include <netrel/error.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace netrel {

struct Edge {
    std::size_t tail;
    std::size_t head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed acyclic multigraph with a designated source and terminal.
///
/// Edges are identified by their position in the edge list; parallel edges
/// are distinct edges. Instances are immutable once built.
class Network {
public:
    /// Validates and builds a network. Throws Error with IndexOutOfRange,
    /// SourceEqualsTerminal, TooManyEdges, CyclicGraph or NotConnected.
    static Network build(std::size_t node_count, std::vector<Edge> edges,
                         std::size_t source, std::size_t terminal);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t source() const noexcept { return source_; }
    std::size_t terminal() const noexcept { return terminal_; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t j) const { return edges_.at(j); }
    EdgeSet all_edges() const noexcept { return EdgeSet::full(edges_.size()); }

    // Outgoing edge indices of a node, ascending.
    std::span<const std::size_t> out_edges(std::size_t node) const;
    // Incoming edge indices of a node, ascending.
    std::span<const std::size_t> in_edges(std::size_t node) const;
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_order_; }

    /// True when the terminal is reachable from the source using only the
    /// given surviving edges.
    bool connected(EdgeSet surviving) const;

    friend bool operator==(const Network& a, const Network& b)
    {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ &&
               a.source_ == b.source_ && a.terminal_ == b.terminal_;
    }

private:
    Network() = default;

    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::size_t source_ = 0;
    std::size_t terminal_ = 0;

    std::vector<std::size_t> out_offsets_;
    std::vector<std::size_t> out_list_;
    std::vector<std::size_t> in_offsets_;
    std::vector<std::size_t> in_list_;
    std::vector<std::size_t> topo_order_;
    // Edge indices sorted by the topological rank of their tail.
    std::vector<std::size_t> sweep_order_;
    std::vector<std::size_t> rank_;
};

/// Outage probability of a Rayleigh-faded link with mean SNR gamma,
/// 1 - exp(-1/gamma). Throws NonPositiveSnr unless gamma > 0.
double rayleigh_outage_prob(double mean_snr);

/// Checks that a per-link outage vector matches the network and lies in
/// [0,1]; throws InvalidProbability otherwise.
template <class Scalar>
void check_link_probs(std::span<const Scalar> probs, const Network& net)
{
    if (probs.size() != net.edge_count())
        throw Error(ErrorCode::InvalidProbability,
                    "expected " + std::to_string(net.edge_count()) + " link probabilities, got " +
                        std::to_string(probs.size()));
    for (std::size_t j = 0; j < probs.size(); ++j)
        if (!(probs[j] >= 0 && probs[j] <= 1))
            throw Error(ErrorCode::InvalidProbability,
                        "probability of edge " + std::to_string(j) + " outside [0,1]");
}

} // namespace netrel

#endif
