#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

/// Counters for one global superstep of the simulator.
struct SuperstepTrace {
    std::size_t step = 0;
    std::vector<std::uint64_t> merge_ops;    ///< per partition
    std::vector<std::uint64_t> messages_in;  ///< per partition
    std::uint64_t active_vertices = 0;

    std::uint64_t max_merge_ops() const;
};

template <typename Value>
struct AlgoResult {
    std::vector<Value> values;  ///< aligned with EdgeListGraph::vertices()
    std::vector<SuperstepTrace> traces;
    bool converged = true;
};

/// Synchronous label propagation. Every vertex starts with its own id; each
/// superstep every edge of a partition sends the neighbor's label to both
/// endpoints, messages are folded per (partition, vertex) in edge-index order,
/// partials are combined globally, and each vertex adopts its most frequent
/// label (ties go to the smallest id).
///
/// One merge operation is charged per key of the union in every pairwise
/// combine; the first message at a (partition, vertex) is taken as is.
AlgoResult<VertexId> run_lpa(const EdgeListGraph& g, const PartitionAssignment& a, std::size_t iterations);

/// Power iteration with damping 0.85 and out-degree push; dangling mass is
/// spread uniformly and ranks sum to |V|. Stops when the L1 change drops below
/// `tol`; if `max_iter` is reached first the last iterate is returned with
/// converged = false. Each scalar combine costs one merge operation.
AlgoResult<double> run_pagerank(const EdgeListGraph& g, const PartitionAssignment& a, double tol,
                                std::size_t max_iter);

inline constexpr double kPageRankDamping = 0.85;

/// Predicted merge cost per partition under the sequential-fold model, where
/// merging the k-th message at a vertex costs k: sum_v d(j,v)(d(j,v)+1)/2.
std::vector<std::uint64_t> merge_cost_model(const PartitionAssignment& a, const EdgeListGraph& g);

/// Instrumented merge operations, indexed [superstep][partition].
std::vector<std::vector<std::uint64_t>> instrumented_merge_counts(const std::vector<SuperstepTrace>& traces);

}  // namespace edgecut
