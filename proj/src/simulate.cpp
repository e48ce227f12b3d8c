#include <netrel/capacity.hpp>
#include <netrel/correlated.hpp>
#include <netrel/simulate.hpp>

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <thread>

namespace netrel {

namespace {

struct Tally {
    std::vector<std::uint64_t> histogram;
    // Sum of squared capacities, for the sample variance.
    std::uint64_t sum_sq = 0;
};

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

void check_prob(double p, const std::string& name)
{
    if (!(p >= 0 && p <= 1))
        invalid(name + " must lie in [0,1]");
}

// Outage probability per link for the independent models.
std::optional<std::vector<double>> independent_probs(const LinkModel& model, std::size_t n)
{
    if (auto* u = std::get_if<UniformLinks>(&model)) {
        check_prob(u->p, "p");
        return std::vector<double>(n, u->p);
    }
    if (auto* h = std::get_if<HeterogeneousLinks>(&model)) {
        if (h->probs.size() != n)
            invalid("expected " + std::to_string(n) + " link probabilities");
        for (auto p : h->probs)
            check_prob(p, "link probability");
        return h->probs;
    }
    if (auto* r = std::get_if<RayleighLinks>(&model)) {
        if (r->mean_snr.size() != n)
            invalid("expected " + std::to_string(n) + " mean SNR values");
        std::vector<double> out;
        for (auto snr : r->mean_snr) {
            if (!(snr > 0))
                invalid("mean SNR must be positive");
            out.push_back(rayleigh_outage_prob(snr));
        }
        return out;
    }
    return std::nullopt;
}

} // namespace

std::uint64_t shard_seed(std::uint64_t seed, unsigned shard)
{
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(shard) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SimReport simulate(const Network& net, const SimConfig& config, const Budget& budget)
{
    if (config.trials == 0)
        invalid("trials must be at least 1");
    if (config.shards == 0)
        invalid("shards must be at least 1");
    const auto n = net.edge_count();
    const auto probs = independent_probs(config.model, n);
    const auto* correlated = std::get_if<CorrelatedLinks>(&config.model);
    if (correlated) {
        check_prob(correlated->p, "p");
        check_prob(correlated->rho, "rho");
        try {
            validate_partition(correlated->blocks, n);
        } catch (const Error& e) {
            invalid(e.message());
        }
    }

    const auto m = min_cut_size(net);
    std::vector<std::uint8_t> table;
    if (budget.allows_power_of_two(n))
        table = capacity_table(net, budget);

    auto run_shard = [&](unsigned shard, std::uint64_t trials, Tally& tally) {
        std::mt19937_64 rng(shard_seed(config.seed, shard));
        tally.histogram.assign(m + 1, 0);
        for (std::uint64_t t = 0; t < trials; ++t) {
            EdgeSet surviving;
            if (probs) {
                for (std::size_t j = 0; j < n; ++j)
                    if (!(unit_draw(rng) < (*probs)[j]))
                        surviving.insert(j);
            } else {
                for (auto block : correlated->blocks) {
                    if (unit_draw(rng) < correlated->rho) {
                        if (!(unit_draw(rng) < correlated->p))
                            surviving = surviving | block;
                    } else {
                        block.for_each([&](std::size_t j) {
                            if (!(unit_draw(rng) < correlated->p))
                                surviving.insert(j);
                        });
                    }
                }
            }
            const std::size_t c = table.empty() ? max_flow(net, surviving) : table[surviving.mask()];
            ++tally.histogram[c];
            tally.sum_sq += c * c;
        }
    };

    std::vector<Tally> tallies(config.shards);
    const auto per_shard = config.trials / config.shards;
    const auto remainder = config.trials % config.shards;
    auto shard_trials = [&](unsigned k) { return per_shard + (k < remainder ? 1 : 0); };
    if (config.shards == 1) {
        run_shard(0, config.trials, tallies[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned k = 0; k < config.shards; ++k)
            workers.emplace_back([&, k] { run_shard(k, shard_trials(k), tallies[k]); });
    }

    SimReport report;
    report.trials = config.trials;
    report.seed = config.seed;
    report.capacity_histogram.assign(m + 1, 0);
    std::uint64_t sum_sq = 0;
    for (const auto& t : tallies) {
        for (std::size_t i = 0; i <= m; ++i)
            report.capacity_histogram[i] += t.histogram[i];
        sum_sq += t.sum_sq;
    }

    const auto trials = static_cast<double>(config.trials);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i <= m; ++i)
        sum += i * report.capacity_histogram[i];
    report.outage_estimate = static_cast<double>(report.capacity_histogram[0]) / trials;
    report.outage_stderr =
        std::sqrt(report.outage_estimate * (1 - report.outage_estimate) / trials);
    report.ergodic_estimate = static_cast<double>(sum) / trials;
    if (config.trials > 1) {
        const double mean = report.ergodic_estimate;
        const double variance =
            std::max(0.0, (static_cast<double>(sum_sq) - trials * mean * mean) / (trials - 1));
        report.ergodic_stderr = std::sqrt(variance / trials);
    }
    return report;
}

std::string describe(const LinkModel& model)
{
    struct Visitor {
        std::string operator()(const UniformLinks&) const { return "uniform"; }
        std::string operator()(const HeterogeneousLinks&) const { return "heterogeneous"; }
        std::string operator()(const RayleighLinks&) const { return "rayleigh"; }
        std::string operator()(const CorrelatedLinks&) const { return "correlated"; }
    };
    return std::visit(Visitor{}, model);
}

} // namespace netrel
