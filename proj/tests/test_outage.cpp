#include "oracle.hpp"

#include <netrel/outage.hpp>

#include <doctest.h>

#include <cmath>

using namespace netrel;

namespace {

Poly poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (auto x : c)
        v.emplace_back(x);
    return Poly(std::move(v));
}

std::vector<Network> test_networks()
{
    std::vector<Network> nets;
    for (const auto& name : oracle::fixture_names())
        nets.push_back(oracle::fixture(name));
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i)
        nets.push_back(oracle::random_dag(rng, 10));
    return nets;
}

} // namespace

TEST_CASE("cut enumerators")
{
    auto a1 = cut_enumerator(enumerate_cutsets(oracle::fixture("n1")));
    CHECK(a1.as_polynomial() == poly({0, 1, 3, 1}));
    CHECK(a1.total() == 5);
    auto single = cut_enumerator(enumerate_cutsets(Network::build(2, {{0, 1}}, 0, 1)));
    CHECK(single.as_polynomial() == poly({0, 1}));
    auto a2 = cut_enumerator(enumerate_cutsets(oracle::fixture("n2")));
    CHECK(a2.as_polynomial() == poly({0, 0, 2, 4, 1}));
}

TEST_CASE("outage polynomials of the fixtures")
{
    CHECK(outage_polynomial(enumerate_cutsets(oracle::fixture("n1"))) == poly({0, 1, 1, -1}));
    CHECK(outage_polynomial(enumerate_cutsets(oracle::fixture("n2"))) == poly({0, 0, 2, 0, -1}));
    CHECK(outage_polynomial(enumerate_cutsets(oracle::fixture("n4"))) == poly({0, 0, 4, -2, -4, 4, -1}));
    CHECK(outage_polynomial(enumerate_cutsets(oracle::fixture("n5"))) == poly({0, 0, 4, -4, 1}));
    CHECK(outage_polynomial(enumerate_cutsets(oracle::fixture("n6"))) == poly({0, 0, 0, 4, -4, 1}));
}

TEST_CASE("outage by paths")
{
    auto net = oracle::fixture("n1");
    auto paths = enumerate_paths(net);
    std::vector<Rational> half(3, Rational(1, 2));
    CHECK(outage_by_paths<Rational>(paths, half) == Rational(5, 8));
    for (int i = 0; i <= 10; ++i) {
        Rational p(i, 10);
        std::vector<Rational> probs(3, p);
        CHECK(outage_by_paths<Rational>(paths, probs) == p + p * p - p * p * p);
    }
    std::vector<double> zeros(3, 0.0), ones(3, 1.0);
    CHECK(outage_by_paths<double>(paths, zeros) == 0.0);
    CHECK(outage_by_paths<double>(paths, ones) == 1.0);
    std::vector<double> d(3, 0.5);
    CHECK(outage_by_paths<double>(paths, d) == doctest::Approx(0.625).epsilon(1e-15));
    CHECK_THROWS_AS(outage_by_paths<double>(paths, d, Budget{2}), Error);
}

TEST_CASE("outage by minimal cuts")
{
    auto n2 = enumerate_cutsets(oracle::fixture("n2"));
    for (int i = 0; i <= 10; ++i) {
        Rational p(i, 10);
        std::vector<Rational> probs(4, p);
        CHECK(outage_by_cuts<Rational>(n2.minimal_cuts, probs) == 2 * p * p - p * p * p * p);
    }
    // Series pair with different link probabilities: 1 - (1-p1)(1-p2).
    auto n3 = enumerate_cutsets(oracle::fixture("n3"));
    std::vector<Rational> hetero{Rational(1, 5), Rational(2, 3)};
    CHECK(outage_by_cuts<Rational>(n3.minimal_cuts, hetero) ==
          Rational(1, 5) + Rational(2, 3) - Rational(1, 5) * Rational(2, 3));
    try {
        outage_by_cuts<Rational>(n2.minimal_cuts, hetero, Budget{3});
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CutBudgetExceeded);
    }
}

TEST_CASE("outage by reliability sum")
{
    auto n1 = enumerate_cutsets(oracle::fixture("n1"));
    std::vector<Rational> half(3, Rational(1, 2));
    CHECK(outage_by_reliability_sum<Rational>(n1, half) == Rational(5, 8));
    std::vector<Rational> ones(3, Rational(1));
    CHECK(outage_by_reliability_sum<Rational>(n1, ones) == 1);
    auto n5 = enumerate_cutsets(oracle::fixture("n5"));
    std::vector<Rational> tenth(4, Rational(1, 10));
    CHECK(outage_by_reliability_sum<Rational>(n5, tenth) == Rational(361, 10000));
}

TEST_CASE("three methods and the brute-force oracle agree")
{
    std::mt19937_64 rng(99);
    for (const auto& net : test_networks()) {
        const auto n = net.edge_count();
        const auto paths = enumerate_paths(net);
        const auto cuts = enumerate_cutsets(net);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> probs;
            for (std::size_t j = 0; j < n; ++j)
                probs.push_back(oracle::random_prob(rng));
            const auto reference = oracle::outage(net, probs);
            CHECK(outage_by_paths<Rational>(paths, probs) == reference);
            CHECK(outage_by_cuts<Rational>(cuts.minimal_cuts, probs) == reference);
            CHECK(outage_by_reliability_sum<Rational>(cuts, probs) == reference);

            std::vector<double> d;
            for (const auto& p : probs)
                d.push_back(to_double(p));
            const double r = to_double(reference);
            CHECK(std::abs(outage_by_paths<double>(paths, d) - r) <= 1e-12);
            CHECK(std::abs(outage_by_cuts<double>(cuts.minimal_cuts, d) - r) <= 1e-12);
            CHECK(std::abs(outage_by_reliability_sum<double>(cuts, d) - r) <= 1e-12);
        }
    }
}

TEST_CASE("outage polynomial properties")
{
    for (const auto& net : test_networks()) {
        const auto n = net.edge_count();
        const auto cuts = enumerate_cutsets(net);
        const auto enumerator = cut_enumerator(cuts);
        const auto outage = outage_polynomial(enumerator, n);

        CHECK(enumerator[n] == 1);
        CHECK(enumerator.total() == cuts.count());
        CHECK(outage(Rational(0)) == 0);
        CHECK(outage(Rational(1)) == 1);

        // (1-p)^n A(p/(1-p)) evaluated independently at rational points.
        const auto a = enumerator.as_polynomial();
        for (int i = 0; i < 9; ++i) {
            Rational p(i, 9);
            Rational q = 1 - p;
            Rational q_n = 1;
            for (std::size_t j = 0; j < n; ++j)
                q_n *= q;
            CHECK(outage(p) == q_n * a(p / q));
            std::vector<Rational> uniform(n, p);
            CHECK(outage(p) == oracle::outage(net, uniform));
        }

        Rational previous = 0;
        for (int i = 0; i <= 1000; ++i) {
            Rational value = outage(Rational(i, 1000));
            CHECK(value >= previous);
            previous = value;
        }

        // Leading-order behaviour at p = 1e-4.
        const auto summary = asymptotic_summary(enumerator);
        CHECK(summary.diversity_order == cuts.min_cut);
        CHECK(summary.coding_gain == cuts.minimum_cuts.size());
        const Rational small(1, 10000);
        Rational leading = Rational(summary.coding_gain);
        for (std::size_t i = 0; i < summary.diversity_order; ++i)
            leading *= small;
        const double ratio = to_double(outage(small) / leading);
        CHECK(std::abs(ratio - 1.0) <= 1e-3);
    }
}

TEST_CASE("bounds")
{
    auto cuts = enumerate_cutsets(oracle::fixture("n1"));
    auto enumerator = cut_enumerator(cuts);
    auto b = outage_bounds(enumerator, cuts.minimal_cuts, 3);
    CHECK(b.upper_all_cuts == poly({0, 1, 3, 1}));
    CHECK(b.upper_minimal_cuts == poly({0, 1, 1}));
    CHECK(b.lower == poly({0, 1, -2, 1}));

    auto single = enumerate_cutsets(Network::build(2, {{0, 1}}, 0, 1));
    auto bs = outage_bounds(cut_enumerator(single), single.minimal_cuts, 1);
    CHECK(bs.upper_all_cuts == poly({0, 1}));
    CHECK(bs.upper_minimal_cuts == poly({0, 1}));
    CHECK(bs.lower == poly({0, 1}));

    auto n2 = enumerate_cutsets(oracle::fixture("n2"));
    auto b2 = outage_bounds(cut_enumerator(n2), n2.minimal_cuts, 4);
    CHECK(b2.lower == Rational(2) * bernoulli_term<Rational>(2, 2));

    for (const auto& net : test_networks()) {
        auto c = enumerate_cutsets(net);
        auto e = cut_enumerator(c);
        auto o = outage_polynomial(e, net.edge_count());
        auto bounds = outage_bounds(e, c.minimal_cuts, net.edge_count());
        for (int i = 0; i <= 200; ++i) {
            Rational p(i, 200);
            auto value = o(p);
            CHECK(bounds.lower(p) <= value);
            CHECK(value <= std::min(Rational(1), bounds.upper_all_cuts(p)));
            CHECK(value <= std::min(Rational(1), bounds.upper_minimal_cuts(p)));
        }
    }
}

TEST_CASE("asymptotic summaries")
{
    auto summary = [](const char* name) {
        return asymptotic_summary(cut_enumerator(enumerate_cutsets(oracle::fixture(name))));
    };
    CHECK(summary("n1") == AsymptoticSummary{1, 1});
    CHECK(summary("n4") == AsymptoticSummary{2, 4});
    CHECK(summary("n5") == AsymptoticSummary{2, 4});
    CHECK(summary("n6") == AsymptoticSummary{3, 4});
    CHECK(asymptotic_summary(cut_enumerator(enumerate_cutsets(Network::build(2, {{0, 1}}, 0, 1)))) ==
          AsymptoticSummary{1, 1});
}
