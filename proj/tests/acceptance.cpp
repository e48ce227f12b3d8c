// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracle.hpp"

#include <netrel/capacity.hpp>
#include <netrel/correlated.hpp>
#include <netrel/enumerate.hpp>
#include <netrel/outage.hpp>
#include <netrel/polynomial.hpp>
#include <netrel/simulate.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace netrel;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

Poly poly(std::initializer_list<long long> c)
{
    std::vector<Rational> v;
    for (auto x : c)
        v.emplace_back(x);
    return Poly(std::move(v));
}

std::vector<EdgeSet> sets(std::initializer_list<std::initializer_list<std::size_t>> lists)
{
    std::vector<EdgeSet> out;
    for (auto l : lists)
        out.push_back(EdgeSet::of(l));
    return out;
}

Network with_direct_link(const Network& net)
{
    auto edges = net.edges();
    edges.push_back({net.source(), net.terminal()});
    return Network::build(net.node_count(), std::move(edges), net.source(), net.terminal());
}

// Brute-force expected capacity: sum over 2^n states of P(state) times the
// largest number of pairwise edge-disjoint surviving paths.
double brute_ergodic(const Network& net, double p)
{
    const auto paths = oracle::all_paths(net);
    const auto n = net.edge_count();
    double total = 0;
    for (std::uint64_t surviving = 0; surviving <= oracle::full_mask(n); ++surviving) {
        const auto up = static_cast<int>(std::popcount(surviving));
        const double w = std::pow(1 - p, up) * std::pow(p, static_cast<int>(n) - up);
        total += w * static_cast<double>(oracle::max_disjoint_paths(paths, surviving));
    }
    return total;
}

void golden_polynomials(Check& c)
{
    const std::map<std::string, std::string> golden{
        {"n1", "p + p^2 - p^3"},
        {"n2", "2p^2 - p^4"},
        {"n4", "4p^2 - 2p^3 - 4p^4 + 4p^5 - p^6"},
        {"n5", "4p^2 - 4p^3 + p^4"},
        {"n6", "4p^3 - 4p^4 + p^5"},
    };
    for (const auto& [name, expected] : golden) {
        const auto got = to_string(outage_polynomial(enumerate_cutsets(oracle::fixture(name))));
        c.expect(got == expected, name + ": got \"" + got + "\"");
    }
}

void cut_families(Check& c)
{
    const auto n1 = enumerate_cutsets(oracle::fixture("n1"));
    c.expect(n1.all_cuts == sets({{0}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}), "n1 all cuts");
    c.expect(n1.minimal_cuts == sets({{0}, {1, 2}}), "n1 minimal cuts");
    c.expect(n1.minimum_cuts == sets({{0}}), "n1 minimum cuts");
    const auto a = cut_enumerator(n1).as_polynomial();
    c.expect(a == poly({0, 1, 3, 1}), "n1 A(x): got " + to_string(a, "x"));

    const auto n2 = enumerate_cutsets(oracle::fixture("n2"));
    const auto expected = sets({{0, 1}, {2, 3}});
    c.expect(n2.minimal_cuts == expected, "n2 minimal cuts");
    c.expect(n2.minimum_cuts == expected, "n2 minimum cuts");
}

void asymptotics(Check& c)
{
    for (const auto& name : oracle::fixture_names()) {
        const auto net = oracle::fixture(name);
        const auto cuts = enumerate_cutsets(net);
        const auto enumerator = cut_enumerator(cuts);
        const auto summary = asymptotic_summary(enumerator);
        const auto o = outage_polynomial(enumerator, cuts.edge_count);
        c.expect(summary.diversity_order == min_cut_size(net), name + ": d != min cut size");
        c.expect(summary.diversity_order == o.lowest_power(), name + ": d != lowest power of O(p)");
        c.expect(summary.coding_gain == cuts.minimum_cuts.size(), name + ": alpha != |M|");
        c.expect(Rational(static_cast<long long>(summary.coding_gain)) == o.coeff(o.lowest_power()),
                 name + ": alpha != leading coefficient");

        const Rational p(1, 10000);
        Rational leading(static_cast<long long>(enumerator[summary.diversity_order]));
        for (std::size_t i = 0; i < summary.diversity_order; ++i)
            leading *= p;
        const double ratio = to_double(Rational(o(p) / leading));
        c.expect(std::abs(ratio - 1) <= 1e-3, name + ": ratio " + format_double(ratio, 12));
    }
}

void bounds(Check& c)
{
    const auto cuts = enumerate_cutsets(oracle::fixture("n1"));
    const auto enumerator = cut_enumerator(cuts);
    const auto o = outage_polynomial(enumerator, cuts.edge_count);
    const auto b = outage_bounds(enumerator, cuts.minimal_cuts, cuts.edge_count);
    const auto upper_all = poly({0, 1, 3, 1});
    const auto upper_minimal = poly({0, 1, 1});
    const auto lower = poly({0, 1}) * pow(Poly::one_minus_p(), 2);
    c.expect(b.upper_all_cuts == upper_all, "all-cuts upper bound: " + to_string(b.upper_all_cuts));
    c.expect(b.upper_minimal_cuts == upper_minimal, "minimal-cuts upper bound: " + to_string(b.upper_minimal_cuts));
    c.expect(b.lower == lower, "lower bound: " + to_string(b.lower));

    const Rational one(1);
    for (long long k = 0; k <= 1000; ++k) {
        const Rational p(k, 1000);
        const Rational value = o(p);
        const Rational lo = b.lower(p);
        const Rational hi_all = std::min(one, b.upper_all_cuts(p));
        const Rational hi_min = std::min(one, b.upper_minimal_cuts(p));
        if (!(lo <= value && value <= hi_all && value <= hi_min)) {
            c.expect(false, "violated at p = " + to_string(p));
            break;
        }
    }
}

void capacity_spectra(Check& c)
{
    std::map<std::string, Poly> ergodic{
        {"n1", poly({1, -1, -1, 1})},
        {"n2", poly({2, -4, 4, -4, 2})},
        {"n4", poly({2, -5, 6, -8, 9, -5, 1})},
        {"n5", poly({2, -4, 2})},
        {"n6", poly({3, -5, 2})},
    };
    for (const auto& [name, expected] : ergodic) {
        const auto net = oracle::fixture(name);
        const auto spectrum = capacity_spectrum(net, enumerate_cutsets(net));
        c.expect(spectrum.ergodic == expected, name + ": E[C] = " + to_string(spectrum.ergodic));
        if (name == "n2") {
            c.expect(spectrum.levels.size() == 3, "n2: expected levels 0..2");
            if (spectrum.levels.size() == 3) {
                c.expect(spectrum.levels[1] == poly({0, 4, -8, 4}), "n2: C1 = " + to_string(spectrum.levels[1]));
                c.expect(spectrum.levels[2] == poly({1, -4, 6, -4, 1}), "n2: C2 = " + to_string(spectrum.levels[2]));
            }
        }
    }
}

void correlated_form(Check& c)
{
    const auto cuts = enumerate_cutsets(oracle::fixture("n2"));
    const auto blocks = sets({{0, 1}, {2, 3}});
    const auto got = correlated_outage_poly(cuts, blocks);
    const auto p = Poly2::p();
    const auto rho = Poly2::rho();
    const auto first = rho * p + p * p - rho * p * p;
    const auto second = Poly2(2) - rho * p - p * p + rho * p * p;
    c.expect(got == first * second, "symbolic form: " + to_string(got));
    c.expect(got.at_rho(Rational(0)) == poly({0, 0, 2, 0, -1}), "rho = 0: " + to_string(got.at_rho(Rational(0))));
    c.expect(got.at_rho(Rational(1)) == poly({0, 2, -1}), "rho = 1: " + to_string(got.at_rho(Rational(1))));
}

void cross_agreement(Check& c)
{
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto net = oracle::random_dag(rng, 10);
        const auto n = net.edge_count();
        const auto paths = enumerate_paths(net);
        const auto cuts = enumerate_cutsets(net);
        const auto label = "dag " + std::to_string(trial);

        std::vector<double> pf(n);
        for (auto& x : pf)
            x = unit(rng);
        const double expected_f = oracle::outage(net, pf);
        const double by_paths = outage_by_paths<double>(paths, pf);
        const double by_cuts = outage_by_cuts<double>(cuts.minimal_cuts, pf);
        const double by_sum = outage_by_reliability_sum<double>(cuts, pf);
        c.expect(std::abs(by_paths - expected_f) <= 1e-12, label + ": paths (floating)");
        c.expect(std::abs(by_cuts - expected_f) <= 1e-12, label + ": minimal cuts (floating)");
        c.expect(std::abs(by_sum - expected_f) <= 1e-12, label + ": reliability sum (floating)");

        std::vector<Rational> pr(n);
        for (auto& x : pr)
            x = oracle::random_prob(rng);
        const Rational expected_r = oracle::outage(net, pr);
        c.expect(outage_by_paths<Rational>(paths, pr) == expected_r, label + ": paths (rational)");
        c.expect(outage_by_cuts<Rational>(cuts.minimal_cuts, pr) == expected_r, label + ": minimal cuts (rational)");
        c.expect(outage_by_reliability_sum<Rational>(cuts, pr) == expected_r, label + ": reliability sum (rational)");
    }
}

void monte_carlo(Check& c)
{
    std::uint64_t seed = 1000;
    for (const auto& name : oracle::fixture_names()) {
        const auto net = oracle::fixture(name);
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            SimConfig cfg;
            cfg.trials = 1'000'000;
            cfg.seed = ++seed;
            cfg.model = UniformLinks{p};
            cfg.shards = 4;
            const auto report = simulate(net, cfg);

            const double exact_outage = oracle::outage(net, std::vector<double>(net.edge_count(), p));
            const double exact_ergodic = brute_ergodic(net, p);
            const auto where = name + " p=" + format_double(p, 3);
            c.expect(std::abs(report.outage_estimate - exact_outage) <= 4 * report.outage_stderr,
                     where + ": outage " + format_double(report.outage_estimate, 8) + " vs " +
                         format_double(exact_outage, 8));
            c.expect(std::abs(report.ergodic_estimate - exact_ergodic) <= 4 * report.ergodic_stderr,
                     where + ": ergodic " + format_double(report.ergodic_estimate, 8) + " vs " +
                         format_double(exact_ergodic, 8));
        }
    }
}

void diversity_augmentation(Check& c)
{
    for (const auto& [name, before] : std::map<std::string, std::size_t>{{"n1", 1}, {"n5", 2}}) {
        const auto net = oracle::fixture(name);
        const auto augmented = with_direct_link(net);
        const auto d0 = asymptotic_summary(cut_enumerator(enumerate_cutsets(net))).diversity_order;
        const auto d1 = asymptotic_summary(cut_enumerator(enumerate_cutsets(augmented))).diversity_order;
        c.expect(d0 == before, name + ": d = " + std::to_string(d0));
        c.expect(d1 == before + 1, name + " plus direct link: d = " + std::to_string(d1));
    }
}

struct Criterion {
    int id;
    const char* title;
    double time_limit; // seconds; 0 for none
    std::function<void(Check&)> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "golden outage polynomials", 1.0, golden_polynomials},
        {2, "cut families and cut enumerator", 0, cut_families},
        {3, "diversity order and coding gain", 0, asymptotics},
        {4, "outage bounds on a 1001-point grid", 0, bounds},
        {5, "capacity spectra", 5.0, capacity_spectra},
        {6, "correlated closed form", 0, correlated_form},
        {7, "outage method cross-agreement on 50 random networks", 60.0, cross_agreement},
        {8, "Monte Carlo within 4 standard errors", 120.0, monte_carlo},
        {9, "direct link raises diversity order by one", 0, diversity_augmentation},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = Clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (criterion.time_limit > 0 && seconds > criterion.time_limit)
            check.expect(false, "took " + format_double(seconds, 3) + " s, limit " +
                                    format_double(criterion.time_limit, 3) + " s");

        const bool ok = check.failures.empty();
        failed += !ok;
        std::printf("%s %d %s (%.3f s)\n", ok ? "PASS" : "FAIL", criterion.id, criterion.title, seconds);
        for (const auto& f : check.failures)
            std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
