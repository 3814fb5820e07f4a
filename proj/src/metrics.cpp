#include "edgecut/metrics.hpp"

#include <algorithm>

#include "edgecut/error.hpp"
#include "edgecut/theory.hpp"

namespace edgecut {
namespace {

// Walks every vertex once, handing the visitor the partitions that hold the
// vertex together with its inner degree there. Linear in 2|E|.
template <typename Visitor>
void for_each_vertex_spread(const EdgeListGraph& g, const PartitionAssignment& a, Visitor&& visit) {
    check_aligned(g, a);
    std::vector<std::uint64_t> inner(a.num_parts(), 0);
    std::vector<PartId> touched;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        touched.clear();
        for (const std::size_t e : g.incident_edges(v)) {
            const PartId p = a[e];
            if (inner[p]++ == 0) touched.push_back(p);
        }
        visit(v, static_cast<const std::vector<PartId>&>(touched), static_cast<const std::vector<std::uint64_t>&>(inner));
        for (const PartId p : touched) inner[p] = 0;
    }
}

std::uint64_t replica_total(const EdgeListGraph& g, const PartitionAssignment& a) {
    std::uint64_t total = 0;
    for_each_vertex_spread(g, a, [&](VertexIndex, const auto& parts, const auto&) { total += parts.size(); });
    return total;
}

double balance_of(const std::vector<std::uint64_t>& sizes, std::uint64_t edges) {
    const std::uint64_t largest = *std::max_element(sizes.begin(), sizes.end());
    return static_cast<double>(largest) * static_cast<double>(sizes.size()) / static_cast<double>(edges);
}

}  // namespace

double compute_balance(const EdgeListGraph& g, const PartitionAssignment& a) {
    return balance_of(partition_sizes(g, a), g.edge_count());
}

double compute_rf(const EdgeListGraph& g, const PartitionAssignment& a) {
    return static_cast<double>(replica_total(g, a)) / static_cast<double>(g.vertex_count());
}

std::uint64_t compute_repeated(const EdgeListGraph& g, const PartitionAssignment& a) {
    return replica_total(g, a) - g.vertex_count();
}

FrontierStats compute_frontier(const EdgeListGraph& g, const PartitionAssignment& a) {
    FrontierStats stats;
    for_each_vertex_spread(g, a, [&](VertexIndex, const auto& parts, const auto&) {
        if (parts.size() >= 2) {
            ++stats.frontier_vertices;
            stats.communication_cost += parts.size();
        }
    });
    return stats;
}

MsidsStats compute_msids(const EdgeListGraph& g, const PartitionAssignment& a) {
    MsidsStats stats;
    stats.sum_inner_deg_sq.assign(a.num_parts(), 0);
    for_each_vertex_spread(g, a, [&](VertexIndex, const auto& parts, const auto& inner) {
        for (const PartId p : parts) stats.sum_inner_deg_sq[p] += inner[p] * inner[p];
    });
    stats.msids = *std::max_element(stats.sum_inner_deg_sq.begin(), stats.sum_inner_deg_sq.end());
    return stats;
}

PartitionReport full_report(const EdgeListGraph& g, const PartitionAssignment& a) {
    PartitionReport r;
    r.num_parts = a.num_parts();
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.partition_sizes = partition_sizes(g, a);
    r.balance = balance_of(r.partition_sizes, r.edge_count);
    r.sum_inner_deg_sq.assign(a.num_parts(), 0);

    std::uint64_t slots = 0;
    for_each_vertex_spread(g, a, [&](VertexIndex v, const auto& parts, const auto& inner) {
        r.replica_total += parts.size();
        if (parts.size() >= 2) {
            ++r.frontier_vertices;
            r.communication_cost += parts.size();
        }
        std::uint64_t degree = 0;
        for (const PartId p : parts) {
            r.sum_inner_deg_sq[p] += inner[p] * inner[p];
            degree += inner[p];
        }
        if (degree != g.degrees()[v]) throw InvariantViolation("inner degrees do not sum to vertex degree");
        slots += degree;
    });

    r.repeated_vertices = r.replica_total - r.vertex_count;
    r.replication_factor = static_cast<double>(r.replica_total) / static_cast<double>(r.vertex_count);
    r.msids = *std::max_element(r.sum_inner_deg_sq.begin(), r.sum_inner_deg_sq.end());

    if (slots != 2 * r.edge_count) throw InvariantViolation("edge slots do not sum to 2|E|");
    if (const BoundCheck bound = check_rf_msids_bound(r); !bound.holds) {
        throw InvariantViolation("RF * MSIDS lower bound violated");
    }
    return r;
}

}  // namespace edgecut
