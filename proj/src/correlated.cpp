#include <netrel/correlated.hpp>

#include <string>

namespace netrel {

void validate_partition(std::span<const EdgeSet> blocks, std::size_t edge_count)
{
    EdgeSet covered;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw Error(ErrorCode::PartitionMismatch, "block " + std::to_string(b) + " is empty");
        if (blocks[b].intersects(covered))
            throw Error(ErrorCode::PartitionMismatch,
                        "block " + std::to_string(b) + " overlaps an earlier block");
        covered = covered | blocks[b];
    }
    if (covered != EdgeSet::full(edge_count))
        throw Error(ErrorCode::PartitionMismatch,
                    "blocks do not cover exactly the " + std::to_string(edge_count) + " edges");
}

void validate_partition(const CorrelationPartition& partition, std::size_t edge_count)
{
    validate_partition(partition.blocks, edge_count);
    if (partition.rho < 0 || partition.rho > 1)
        throw Error(ErrorCode::InvalidProbability, "rho must lie in [0,1]");
}

namespace detail {

void check_block_count(std::size_t block_size, std::size_t failed)
{
    if (block_size == 0 || failed > block_size)
        throw Error(ErrorCode::InvalidCount, std::to_string(failed) + " failures in a block of " +
                                                 std::to_string(block_size));
}

std::map<std::vector<std::size_t>, std::uint64_t> block_signatures(const CutFamily& cuts,
                                                                   std::span<const EdgeSet> blocks)
{
    std::map<std::vector<std::size_t>, std::uint64_t> out;
    std::vector<std::size_t> signature(blocks.size());
    for (auto cut : cuts.all_cuts) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            signature[b] = (cut & blocks[b]).size();
        ++out[signature];
    }
    return out;
}

} // namespace detail

Poly2 correlated_outage_poly(const CutFamily& cuts, std::span<const EdgeSet> blocks)
{
    return correlated_outage(cuts, blocks, Poly2::p(), Poly2::rho());
}

} // namespace netrel
