// netrel: exact outage, bound, capacity and Monte Carlo analysis of
// directed acyclic source-terminal networks.

#include <netrel/capacity.hpp>
#include <netrel/correlated.hpp>
#include <netrel/enumerate.hpp>
#include <netrel/io.hpp>
#include <netrel/outage.hpp>
#include <netrel/simulate.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace netrel;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string input;
    std::string format;
    bool json_output = false;
    std::uint64_t budget = Budget{}.max_terms;
};

struct SweepOptions {
    std::string p_start = "0";
    std::string p_end = "1";
    std::size_t steps = 101;
    std::vector<std::string> curves{"outage"};
    std::vector<std::string> rho;
    std::string partition;
};

struct SimulateOptions {
    std::optional<std::string> p;
    std::optional<std::string> probs_file;
    std::optional<std::string> snr_file;
    std::optional<std::string> rho;
    std::optional<std::string> partition;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned shards = 1;
    bool check = false;
    bool csv = false;
};

Network load(const GlobalOptions& g)
{
    if (g.input.empty())
        throw Error(ErrorCode::ParseError, "no network given; use --input <file>");
    std::optional<NetworkFormat> format;
    if (g.format == "json")
        format = NetworkFormat::Json;
    else if (g.format == "dot")
        format = NetworkFormat::Dot;
    return read_network(g.input, format);
}

std::string cut_list(const std::vector<EdgeSet>& sets)
{
    std::string out = "{";
    for (std::size_t i = 0; i < sets.size(); ++i)
        out += (i ? ", " : "") + edge_label(sets[i]);
    return out + "}";
}

json set_list(const std::vector<EdgeSet>& sets)
{
    json out = json::array();
    for (auto s : sets)
        out.push_back(to_json(s));
    return out;
}

void print_spectrum(std::ostream& out, const CapacitySpectrum& spectrum)
{
    for (std::size_t i = 0; i < spectrum.levels.size(); ++i)
        out << "C_" << i << "(p) = " << to_string(spectrum.levels[i]) << "\n";
    out << "E[C](p) = " << to_string(spectrum.ergodic) << "\n";
}

int cmd_analyze(const GlobalOptions& g)
{
    const Budget budget{g.budget};
    const auto net = load(g);
    const auto paths = enumerate_paths(net, budget);
    const auto cuts = enumerate_cutsets(net, budget);
    const auto enumerator = cut_enumerator(cuts);
    const auto outage = outage_polynomial(enumerator, net.edge_count());
    const auto bounds = outage_bounds(enumerator, cuts.minimal_cuts, net.edge_count());
    const auto summary = asymptotic_summary(enumerator);
    const auto spectrum = capacity_spectrum(net, cuts, budget);

    if (g.json_output) {
        json doc = {{"n", net.edge_count()},
                    {"nodes", net.node_count()},
                    {"g", paths.count()},
                    {"k", cuts.count()},
                    {"minimal_count", cuts.minimal_cuts.size()},
                    {"minimum_count", cuts.minimum_cuts.size()},
                    {"m", cuts.min_cut},
                    {"cut_enumerator", enumerator.counts()},
                    {"diversity_order", summary.diversity_order},
                    {"coding_gain", summary.coding_gain},
                    {"outage", to_json(outage)},
                    {"bounds",
                     {{"upper_all_cuts", to_json(bounds.upper_all_cuts)},
                      {"upper_minimal_cuts", to_json(bounds.upper_minimal_cuts)},
                      {"lower", to_json(bounds.lower)}}},
                    {"spectrum", to_json(spectrum)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << net.edge_count() << " edges, " << net.node_count() << " nodes, source "
              << net.source() << ", terminal " << net.terminal() << "\n"
              << "g = " << paths.count() << " paths\n"
              << "k = " << cuts.count() << " cut-sets, " << cuts.minimal_cuts.size()
              << " minimal, " << cuts.minimum_cuts.size() << " minimum\n"
              << "m = " << cuts.min_cut << "\n"
              << "A(x) = " << to_string(enumerator.as_polynomial(), "x") << "\n"
              << "d = " << summary.diversity_order << ", alpha = " << summary.coding_gain << "\n"
              << "O(p) = " << to_string(outage) << "\n"
              << "upper bound A(p) = " << to_string(bounds.upper_all_cuts) << "\n"
              << "upper bound (minimal cuts) = " << to_string(bounds.upper_minimal_cuts) << "\n"
              << "lower bound = " << to_string(bounds.lower) << "\n";
    print_spectrum(std::cout, spectrum);
    return 0;
}

int cmd_paths(const GlobalOptions& g)
{
    const auto net = load(g);
    const auto paths = enumerate_paths(net, Budget{g.budget});
    if (g.json_output) {
        std::cout << json{{"g", paths.count()}, {"paths", set_list(paths.paths)}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "g = " << paths.count() << "\n";
    for (auto p : paths.paths)
        std::cout << edge_label(p) << "\n";
    return 0;
}

int cmd_cuts(const GlobalOptions& g)
{
    const auto net = load(g);
    const auto cuts = enumerate_cutsets(net, Budget{g.budget});
    const auto enumerator = cut_enumerator(cuts);
    if (g.json_output) {
        std::cout << json{{"k", cuts.count()},
                          {"m", cuts.min_cut},
                          {"all", set_list(cuts.all_cuts)},
                          {"minimal", set_list(cuts.minimal_cuts)},
                          {"minimum", set_list(cuts.minimum_cuts)},
                          {"cut_enumerator", enumerator.counts()}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "K = " << cut_list(cuts.all_cuts) << "\n"
              << "L = " << cut_list(cuts.minimal_cuts) << "\n"
              << "M = " << cut_list(cuts.minimum_cuts) << "\n"
              << "k = " << cuts.count() << ", m = " << cuts.min_cut << "\n"
              << "A(x) = " << to_string(enumerator.as_polynomial(), "x") << "\n";
    return 0;
}

int cmd_capacity(const GlobalOptions& g, const std::string& method)
{
    const Budget budget{g.budget};
    const auto net = load(g);
    const auto cuts = enumerate_cutsets(net, budget);
    const auto spectrum = method == "disjoint"
                              ? capacity_spectrum_disjoint(cuts.minimal_cuts, net.edge_count())
                              : capacity_spectrum(net, cuts, budget);
    if (g.json_output)
        std::cout << to_json(spectrum).dump(2) << "\n";
    else
        print_spectrum(std::cout, spectrum);
    return 0;
}

std::vector<std::string> split_list(const std::vector<std::string>& items)
{
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

int cmd_sweep(const GlobalOptions& g, const SweepOptions& s)
{
    const Budget budget{g.budget};
    const auto net = load(g);
    const auto start = parse_rational(s.p_start);
    const auto end = parse_rational(s.p_end);
    if (start < 0 || end > 1 || start > end || s.steps < 2)
        throw Error(ErrorCode::InvalidConfig, "need 0 <= p-start <= p-end <= 1 and steps >= 2");

    const auto cuts = enumerate_cutsets(net, budget);
    const auto enumerator = cut_enumerator(cuts);

    std::vector<std::string> header{"p"};
    std::vector<Poly> columns;
    for (const auto& curve : split_list(s.curves)) {
        if (curve == "outage") {
            header.push_back("outage");
            columns.push_back(outage_polynomial(enumerator, net.edge_count()));
        } else if (curve == "bounds") {
            auto b = outage_bounds(enumerator, cuts.minimal_cuts, net.edge_count());
            header.insert(header.end(), {"upper_all_cuts", "upper_minimal_cuts", "lower"});
            columns.insert(columns.end(), {b.upper_all_cuts, b.upper_minimal_cuts, b.lower});
        } else if (curve == "capacity" || curve == "ergodic") {
            auto spectrum = capacity_spectrum(net, cuts, budget);
            if (curve == "capacity") {
                for (std::size_t i = 0; i < spectrum.levels.size(); ++i) {
                    header.push_back("C" + std::to_string(i));
                    columns.push_back(spectrum.levels[i]);
                }
            } else {
                header.push_back("ergodic");
                columns.push_back(spectrum.ergodic);
            }
        } else if (curve == "correlated") {
            if (s.partition.empty())
                throw Error(ErrorCode::InvalidConfig, "correlated curves need --partition");
            const auto partition = read_partition(s.partition);
            validate_partition(partition.blocks, net.edge_count());
            const auto symbolic = correlated_outage_poly(cuts, partition.blocks);
            auto rhos = split_list(s.rho);
            if (rhos.empty())
                rhos.push_back(to_string(partition.rho));
            for (const auto& r : rhos) {
                auto rho = parse_rational(r);
                if (rho < 0 || rho > 1)
                    throw Error(ErrorCode::InvalidProbability, "rho must lie in [0,1]");
                header.push_back("correlated_rho=" + r);
                columns.push_back(symbolic.at_rho(rho));
            }
        } else {
            throw Error(ErrorCode::InvalidConfig, "unknown curve \"" + curve + "\"");
        }
    }

    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + header[i];
    out += "\n";
    for (std::size_t step = 0; step < s.steps; ++step) {
        const Rational p = start + (end - start) * Rational(step) / Rational(s.steps - 1);
        out += format_double(to_double(p));
        for (const auto& c : columns)
            out += "," + format_double(to_double(c(p)));
        out += "\n";
    }
    std::cout << out;
    return 0;
}

std::vector<double> as_doubles(const std::vector<Rational>& v)
{
    std::vector<double> out;
    for (const auto& x : v)
        out.push_back(to_double(x));
    return out;
}

json z_score(double estimate, double exact, double stderr_)
{
    if (stderr_ > 0)
        return (estimate - exact) / stderr_;
    return estimate == exact ? json(0.0) : json(nullptr);
}

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& s)
{
    const Budget budget{g.budget};
    const auto net = load(g);
    const auto n = net.edge_count();
    const int sources = (s.p ? 1 : 0) + (s.probs_file ? 1 : 0) + (s.snr_file ? 1 : 0);
    if (sources != 1)
        throw Error(ErrorCode::InvalidConfig, "give exactly one of --p, --probs, --snr");
    const bool correlated = s.partition.has_value() || s.rho.has_value();
    if (correlated && (!s.p || !s.partition))
        throw Error(ErrorCode::InvalidConfig, "the correlated model needs --p and --partition");

    SimConfig config;
    config.trials = s.trials;
    config.seed = s.seed;
    config.shards = s.shards;

    // Exact per-link probabilities (independent models) or p/rho (correlated).
    std::vector<Rational> exact_probs;
    std::vector<double> link_probs;
    Rational p_exact, rho_exact;
    CorrelationPartition partition;
    if (correlated) {
        partition = read_partition(*s.partition);
        p_exact = parse_rational(*s.p);
        rho_exact = s.rho ? parse_rational(*s.rho) : partition.rho;
        config.model = CorrelatedLinks{to_double(p_exact), partition.blocks, to_double(rho_exact)};
    } else if (s.p) {
        p_exact = parse_rational(*s.p);
        exact_probs.assign(n, p_exact);
        config.model = UniformLinks{to_double(p_exact)};
    } else if (s.probs_file) {
        exact_probs = read_values(*s.probs_file);
        config.model = HeterogeneousLinks{as_doubles(exact_probs)};
    } else {
        auto snr = as_doubles(read_values(*s.snr_file));
        config.model = RayleighLinks{snr};
        for (auto gamma : snr)
            link_probs.push_back(gamma > 0 ? rayleigh_outage_prob(gamma) : -1.0);
    }

    const auto report = simulate(net, config, budget);

    if (s.csv) {
        std::cout << csv_header(report) << "\n" << csv_row(report) << "\n";
        return 0;
    }
    json doc = to_json(report);
    doc["model"] = describe(config.model);
    if (s.check) {
        const auto m = min_cut_size(net);
        double exact_outage = 0, exact_ergodic = 0;
        if (correlated) {
            auto dist = capacity_distribution<Rational>(net, m, partition.blocks, p_exact, rho_exact, budget);
            exact_outage = to_double(dist[0]);
            exact_ergodic = to_double(expected_capacity(dist));
        } else if (!exact_probs.empty()) {
            auto dist = capacity_distribution<Rational>(net, m, std::span<const Rational>(exact_probs), budget);
            exact_outage = to_double(dist[0]);
            exact_ergodic = to_double(expected_capacity(dist));
        } else {
            auto dist = capacity_distribution<double>(net, m, std::span<const double>(link_probs), budget);
            exact_outage = dist[0];
            exact_ergodic = expected_capacity(dist);
        }
        doc["exact_outage"] = exact_outage;
        doc["outage_z"] = z_score(report.outage_estimate, exact_outage, report.outage_stderr);
        doc["exact_ergodic"] = exact_ergodic;
        doc["ergodic_z"] = z_score(report.ergodic_estimate, exact_ergodic, report.ergodic_stderr);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact outage and capacity analysis of source-terminal networks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("-i,--input", global.input, "Network file (JSON or DOT)");
    app.add_option("--format", global.format, "Input format; default from file extension")
        ->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--json", global.json_output, "Machine-readable JSON output");
    app.add_option("--budget", global.budget, "Maximum terms/states for exponential scans")
        ->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "Full report: cuts, O(p), bounds, d, alpha, capacity");
    auto* paths = app.add_subcommand("paths", "List all source-terminal paths");
    auto* cuts = app.add_subcommand("cuts", "List cut-sets K, minimal L and minimum M");

    std::string method = "general";
    auto* capacity = app.add_subcommand("capacity", "Capacity polynomials and ergodic capacity");
    capacity->add_option("--method", method, "general (state scan) or disjoint (product form)")
        ->check(CLI::IsMember({"general", "disjoint"}));

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "CSV of exact curves over a p grid");
    sweep->add_option("--p-start", sweep_opts.p_start, "First grid point");
    sweep->add_option("--p-end", sweep_opts.p_end, "Last grid point");
    sweep->add_option("--steps", sweep_opts.steps, "Grid points, endpoints included");
    sweep->add_option("--curves", sweep_opts.curves,
                      "Comma list of outage, bounds, capacity, ergodic, correlated")
        ->delimiter(',');
    sweep->add_option("--rho", sweep_opts.rho, "Comma list of correlation coefficients")->delimiter(',');
    sweep->add_option("--partition", sweep_opts.partition, "Correlation partition JSON");

    SimulateOptions sim_opts;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo residual-graph simulation");
    simulate_cmd->add_option("--p", sim_opts.p, "Common link outage probability");
    simulate_cmd->add_option("--probs", sim_opts.probs_file, "File of per-link outage probabilities");
    simulate_cmd->add_option("--snr", sim_opts.snr_file, "File of per-link mean SNRs (Rayleigh)");
    simulate_cmd->add_option("--rho", sim_opts.rho, "Correlation coefficient (overrides partition)");
    simulate_cmd->add_option("--partition", sim_opts.partition, "Correlation partition JSON");
    simulate_cmd->add_option("--trials", sim_opts.trials, "Number of trials");
    simulate_cmd->add_option("--seed", sim_opts.seed, "Generator seed");
    simulate_cmd->add_option("--shards", sim_opts.shards, "Independent streams run in parallel");
    simulate_cmd->add_flag("--check", sim_opts.check, "Also compute exact values and z-scores");
    simulate_cmd->add_flag("--csv", sim_opts.csv, "Emit a CSV header and row instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze)
            return cmd_analyze(global);
        if (*paths)
            return cmd_paths(global);
        if (*cuts)
            return cmd_cuts(global);
        if (*capacity)
            return cmd_capacity(global, method);
        if (*sweep)
            return cmd_sweep(global, sweep_opts);
        if (*simulate_cmd)
            return cmd_simulate(global, sim_opts);
    } catch (const Error& e) {
        std::cerr << "netrel: " << e.what() << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        std::cerr << "netrel: internal error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
