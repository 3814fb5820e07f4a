#pragma once

// Fixtures and brute-force oracles shared by the unit tests and the acceptance
// binary. The oracles materialize vertex sets with std::set/std::map and never
// call into the metric code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut::testing {

inline std::vector<Edge> example_edges() {
    return {{0, 1}, {0, 3}, {1, 4}, {1, 5}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}};
}

inline std::vector<PartId> example_assignment() { return {0, 0, 1, 2, 2, 2, 1, 1, 2}; }

struct OracleMetrics {
    std::uint64_t vertex_count = 0;
    std::uint64_t replica_total = 0;
    std::uint64_t repeated = 0;
    std::uint64_t frontier = 0;
    std::uint64_t communication = 0;
    std::uint64_t msids = 0;
    std::uint64_t max_size = 0;
    std::vector<std::uint64_t> sum_sq;
    std::vector<std::uint64_t> sizes;
    std::map<VertexId, std::uint64_t> rho;
};

inline OracleMetrics oracle_metrics(const std::vector<Edge>& edges, const std::vector<PartId>& part, PartId m) {
    OracleMetrics o;
    std::set<VertexId> all;
    std::vector<std::set<VertexId>> members(m);
    std::vector<std::map<VertexId, std::uint64_t>> inner(m);
    o.sizes.assign(m, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& edge = edges[e];
        all.insert(edge.src);
        all.insert(edge.dst);
        members[part[e]].insert(edge.src);
        members[part[e]].insert(edge.dst);
        ++inner[part[e]][edge.src];
        ++inner[part[e]][edge.dst];
        ++o.sizes[part[e]];
    }
    o.vertex_count = all.size();
    for (PartId j = 0; j < m; ++j) {
        o.replica_total += members[j].size();
        for (VertexId v : members[j]) ++o.rho[v];
        std::uint64_t sq = 0;
        for (const auto& [v, d] : inner[j]) sq += d * d;
        o.sum_sq.push_back(sq);
    }
    o.repeated = o.replica_total - o.vertex_count;
    for (const auto& [v, r] : o.rho) {
        if (r >= 2) {
            ++o.frontier;
            o.communication += r;
        }
    }
    o.msids = *std::max_element(o.sum_sq.begin(), o.sum_sq.end());
    o.max_size = *std::max_element(o.sizes.begin(), o.sizes.end());
    return o;
}

/// Small multigraph on ids [0, max_vertex] with self-loops allowed.
inline std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t max_edges, VertexId max_vertex) {
    std::uniform_int_distribution<std::size_t> count(1, max_edges);
    std::uniform_int_distribution<VertexId> vertex(0, max_vertex);
    std::vector<Edge> edges(count(rng));
    for (Edge& e : edges) e = {vertex(rng), vertex(rng)};
    return edges;
}

inline std::vector<PartId> random_parts(std::mt19937_64& rng, std::size_t n, PartId m) {
    std::uniform_int_distribution<PartId> pick(0, m - 1);
    std::vector<PartId> out(n);
    for (PartId& p : out) p = pick(rng);
    return out;
}

}  // namespace edgecut::testing
