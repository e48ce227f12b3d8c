#ifndef NETREL_SIMULATE_HPP
#define NETREL_SIMULATE_HPP

#include <netrel/budget.hpp>
#include <netrel/network.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace netrel {

struct UniformLinks {
    double p = 0;
};

struct HeterogeneousLinks {
    std::vector<double> probs;
};

// Per-link mean SNR, mapped to outage probability 1 - exp(-1/snr).
struct RayleighLinks {
    std::vector<double> mean_snr;
};

struct CorrelatedLinks {
    double p = 0;
    std::vector<EdgeSet> blocks;
    double rho = 0;
};

using LinkModel = std::variant<UniformLinks, HeterogeneousLinks, RayleighLinks, CorrelatedLinks>;

struct SimConfig {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    LinkModel model;
    // Trials are split across this many independently seeded streams.
    unsigned shards = 1;
};

struct SimReport {
    double outage_estimate = 0;
    double outage_stderr = 0;
    std::vector<std::uint64_t> capacity_histogram; // index = capacity level 0..m
    double ergodic_estimate = 0;
    double ergodic_stderr = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Generator seed used for shard `shard` of a run seeded with `seed`.
std::uint64_t shard_seed(std::uint64_t seed, unsigned shard);

/// Monte Carlo estimate of outage probability and capacity distribution from
/// random residual networks. Link states are drawn with std::mt19937_64;
/// a link fails when the top 53 bits of a draw, read as a fraction in
/// [0,1), fall below its outage probability. Throws InvalidConfig.
SimReport simulate(const Network& net, const SimConfig& config, const Budget& budget = {});

std::string describe(const LinkModel& model);

} // namespace netrel

#endif
