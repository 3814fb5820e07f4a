#pragma once

#include <cstdint>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

/// Every partition-quality metric for one (graph, assignment) pair.
///
/// Identities that hold exactly for every report:
///   replica_total == replication_factor * vertex_count (before division)
///   repeated_vertices == replica_total - vertex_count
///   msids == max(sum_inner_deg_sq)
struct PartitionReport {
    PartId num_parts = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    double balance = 0.0;
    double replication_factor = 0.0;
    std::uint64_t replica_total = 0;
    std::uint64_t repeated_vertices = 0;
    std::uint64_t frontier_vertices = 0;
    std::uint64_t communication_cost = 0;
    std::uint64_t msids = 0;
    std::vector<std::uint64_t> sum_inner_deg_sq;
    std::vector<std::uint64_t> partition_sizes;

    friend bool operator==(const PartitionReport&, const PartitionReport&) = default;
};

/// max_i |E_i| / (|E| / m)
double compute_balance(const EdgeListGraph& g, const PartitionAssignment& a);

/// sum_i |V(E_i)| / |V|
double compute_rf(const EdgeListGraph& g, const PartitionAssignment& a);

/// sum_i |V(E_i)| - |V|
std::uint64_t compute_repeated(const EdgeListGraph& g, const PartitionAssignment& a);

struct FrontierStats {
    std::uint64_t frontier_vertices = 0;   ///< vertices present in >= 2 partitions
    std::uint64_t communication_cost = 0;  ///< sum of replica counts over frontier vertices
};
FrontierStats compute_frontier(const EdgeListGraph& g, const PartitionAssignment& a);

struct MsidsStats {
    std::uint64_t msids = 0;
    std::vector<std::uint64_t> sum_inner_deg_sq;
};
/// Inner degree d(j, v) counts edge slots of partition j at v; a self-loop counts 2.
MsidsStats compute_msids(const EdgeListGraph& g, const PartitionAssignment& a);

/// All metrics in one pass. Verifies the report identities and the
/// RF * MSIDS lower bound; throws InvariantViolation if either fails.
PartitionReport full_report(const EdgeListGraph& g, const PartitionAssignment& a);

}  // namespace edgecut
