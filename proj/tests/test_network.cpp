#include "oracle.hpp"

#include <netrel/network.hpp>

#include <doctest.h>

#include <cmath>

using namespace netrel;

TEST_CASE("three-edge relay network builds")
{
    auto net = Network::build(3, {{0, 1}, {1, 2}, {1, 2}}, 0, 2);
    CHECK(net.edge_count() == 3);
    CHECK(net.node_count() == 3);
    CHECK(net.edge(1) == Edge{1, 2});
    CHECK(net.edge(2) == Edge{1, 2});
    CHECK(net.connected(net.all_edges()));
    CHECK_FALSE(net.connected(EdgeSet::of({1, 2})));
    CHECK(net.connected(EdgeSet::of({0, 2})));
}

TEST_CASE("single edge network")
{
    auto net = Network::build(2, {{0, 1}}, 0, 1);
    CHECK(net.edge_count() == 1);
    CHECK(net.topological_order() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("construction errors")
{
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(code_of([] { Network::build(3, {{0, 1}}, 0, 2); }) == ErrorCode::NotConnected);
    CHECK(code_of([] { Network::build(2, {{0, 1}}, 1, 1); }) == ErrorCode::SourceEqualsTerminal);
    CHECK(code_of([] { Network::build(3, {{0, 1}, {1, 2}, {2, 1}}, 0, 2); }) == ErrorCode::CyclicGraph);
    CHECK(code_of([] { Network::build(2, {{0, 5}}, 0, 1); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { Network::build(2, {{0, 1}}, 0, 7); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { Network::build(2, std::vector<Edge>(64, Edge{0, 1}), 0, 1); }) ==
          ErrorCode::TooManyEdges);
    CHECK(code_of([] { Network::build(2, {{1, 0}, {0, 1}, {1, 1}}, 0, 1); }) == ErrorCode::CyclicGraph);
}

TEST_CASE("dangling edges are accepted")
{
    // Edge 2 leaves the terminal side and edge 3 never reaches it.
    auto net = Network::build(4, {{0, 1}, {1, 2}, {3, 1}, {0, 3}}, 0, 2);
    CHECK(net.edge_count() == 4);
    CHECK(net.connected(EdgeSet::of({0, 1})));
}

TEST_CASE("edge index round trip on random graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto net = oracle::random_dag(rng, 12);
        std::vector<Edge> again = net.edges();
        auto rebuilt = Network::build(net.node_count(), again, net.source(), net.terminal());
        for (std::size_t j = 0; j < net.edge_count(); ++j)
            CHECK(rebuilt.edge(j) == net.edge(j));
        for (std::size_t v = 0; v < net.node_count(); ++v)
            for (auto j : net.out_edges(v))
                CHECK(net.edge(j).tail == v);
    }
}

TEST_CASE("validation accepts exactly the acyclic graphs")
{
    std::mt19937_64 rng(5);
    int acyclic = 0, cyclic = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t nodes = 4;
        std::vector<Edge> edges;
        // Always include a 0 -> 3 edge so connectivity never masks the result.
        edges.push_back({0, 3});
        const auto extra = oracle::uniform_index(rng, 0, 5);
        for (std::size_t j = 0; j < extra; ++j) {
            auto a = oracle::uniform_index(rng, 0, nodes - 1);
            auto b = oracle::uniform_index(rng, 0, nodes - 1);
            edges.push_back({a, b});
        }
        const bool expect_cycle = oracle::has_cycle(nodes, edges);
        bool built = true;
        try {
            auto net = Network::build(nodes, edges, 0, 3);
            // A valid topological order puts every tail before its head.
            std::vector<std::size_t> rank(nodes);
            for (std::size_t i = 0; i < nodes; ++i)
                rank[net.topological_order()[i]] = i;
            for (const auto& e : net.edges())
                CHECK(rank[e.tail] < rank[e.head]);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CyclicGraph);
            built = false;
        }
        CHECK(built == !expect_cycle);
        (expect_cycle ? cyclic : acyclic)++;
    }
    CHECK(cyclic > 0);
    CHECK(acyclic > 0);
}

TEST_CASE("rayleigh outage mapping")
{
    CHECK(rayleigh_outage_prob(1e12) == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(rayleigh_outage_prob(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(rayleigh_outage_prob(1.0) == doctest::Approx(0.6321).epsilon(1e-4));
    CHECK(rayleigh_outage_prob(10.0) == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-15));
    CHECK(rayleigh_outage_prob(10.0) == doctest::Approx(0.09516).epsilon(1e-4));
    CHECK_THROWS_AS(rayleigh_outage_prob(0.0), Error);
    CHECK_THROWS_AS(rayleigh_outage_prob(-3.0), Error);

    double previous = 1.0;
    for (double gamma = 0.05; gamma < 1e6; gamma *= 1.37) {
        const double p = rayleigh_outage_prob(gamma);
        CHECK(p < previous);
        CHECK(p > 0.0);
        previous = p;
    }
}

TEST_CASE("link probability vector checks")
{
    auto net = oracle::fixture("n1");
    std::vector<double> ok{0, 0.5, 1};
    CHECK_NOTHROW(check_link_probs<double>(ok, net));
    std::vector<double> short_vec{0.5};
    CHECK_THROWS_AS(check_link_probs<double>(short_vec, net), Error);
    std::vector<double> out_of_range{0.5, 1.5, 0};
    CHECK_THROWS_AS(check_link_probs<double>(out_of_range, net), Error);
}
