#include <netrel/network.hpp>

#include <algorithm>
#include <cmath>
#include <queue>

namespace netrel {

Network Network::build(std::size_t node_count, std::vector<Edge> edges,
                       std::size_t source, std::size_t terminal)
{
    if (node_count == 0)
        throw Error(ErrorCode::IndexOutOfRange, "network has no nodes");
    if (source >= node_count || terminal >= node_count)
        throw Error(ErrorCode::IndexOutOfRange, "source or terminal index out of range");
    if (source == terminal)
        throw Error(ErrorCode::SourceEqualsTerminal, "source and terminal are both node " +
                                                         std::to_string(source));
    if (edges.size() > max_edges)
        throw Error(ErrorCode::TooManyEdges, std::to_string(edges.size()) +
                                                 " edges, at most " + std::to_string(max_edges) +
                                                 " supported");
    for (std::size_t j = 0; j < edges.size(); ++j)
        if (edges[j].tail >= node_count || edges[j].head >= node_count)
            throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(j) +
                                                        " has an endpoint out of range");

    Network net;
    net.node_count_ = node_count;
    net.edges_ = std::move(edges);
    net.source_ = source;
    net.terminal_ = terminal;

    // CSR adjacency; edge indices within a node stay ascending.
    net.out_offsets_.assign(node_count + 1, 0);
    for (const auto& e : net.edges_)
        ++net.out_offsets_[e.tail + 1];
    for (std::size_t v = 0; v < node_count; ++v)
        net.out_offsets_[v + 1] += net.out_offsets_[v];
    net.out_list_.resize(net.edges_.size());
    {
        auto fill = net.out_offsets_;
        for (std::size_t j = 0; j < net.edges_.size(); ++j)
            net.out_list_[fill[net.edges_[j].tail]++] = j;
    }

    net.in_offsets_.assign(node_count + 1, 0);
    for (const auto& e : net.edges_)
        ++net.in_offsets_[e.head + 1];
    for (std::size_t v = 0; v < node_count; ++v)
        net.in_offsets_[v + 1] += net.in_offsets_[v];
    net.in_list_.resize(net.edges_.size());
    {
        auto fill = net.in_offsets_;
        for (std::size_t j = 0; j < net.edges_.size(); ++j)
            net.in_list_[fill[net.edges_[j].head]++] = j;
    }

    // Kahn's algorithm; smallest ready node first for a canonical order.
    std::vector<std::size_t> indegree(node_count, 0);
    for (const auto& e : net.edges_)
        ++indegree[e.head];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < node_count; ++v)
        if (indegree[v] == 0)
            ready.push(v);
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        net.topo_order_.push_back(v);
        for (auto j : net.out_edges(v))
            if (--indegree[net.edges_[j].head] == 0)
                ready.push(net.edges_[j].head);
    }
    if (net.topo_order_.size() != node_count)
        throw Error(ErrorCode::CyclicGraph, "graph contains a directed cycle");

    net.rank_.assign(node_count, 0);
    for (std::size_t i = 0; i < node_count; ++i)
        net.rank_[net.topo_order_[i]] = i;
    net.sweep_order_.resize(net.edges_.size());
    for (std::size_t j = 0; j < net.edges_.size(); ++j)
        net.sweep_order_[j] = j;
    std::stable_sort(net.sweep_order_.begin(), net.sweep_order_.end(),
                     [&](std::size_t a, std::size_t b) {
                         return net.rank_[net.edges_[a].tail] < net.rank_[net.edges_[b].tail];
                     });

    if (!net.connected(net.all_edges()))
        throw Error(ErrorCode::NotConnected, "no directed path from source " +
                                                 std::to_string(source) + " to terminal " +
                                                 std::to_string(terminal));
    return net;
}

std::span<const std::size_t> Network::out_edges(std::size_t node) const
{
    return {out_list_.data() + out_offsets_.at(node), out_list_.data() + out_offsets_.at(node + 1)};
}

std::span<const std::size_t> Network::in_edges(std::size_t node) const
{
    return {in_list_.data() + in_offsets_.at(node), in_list_.data() + in_offsets_.at(node + 1)};
}

bool Network::connected(EdgeSet surviving) const
{
    // One pass in topological order of edge tails reaches every node
    // reachable from the source.
    thread_local std::vector<char> reached;
    reached.assign(node_count_, 0);
    reached[source_] = 1;
    for (auto j : sweep_order_) {
        const auto& e = edges_[j];
        if (reached[e.tail] && surviving.contains(j))
            reached[e.head] = 1;
    }
    return reached[terminal_] != 0;
}

double rayleigh_outage_prob(double mean_snr)
{
    if (!(mean_snr > 0))
        throw Error(ErrorCode::NonPositiveSnr, "mean SNR must be positive");
    return -std::expm1(-1.0 / mean_snr);
}

} // namespace netrel
