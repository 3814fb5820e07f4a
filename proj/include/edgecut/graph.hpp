#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace edgecut {

/// Opaque vertex label. Labels need not be contiguous; hashing uses the raw value.
using VertexId = std::uint64_t;
using PartId = std::uint32_t;

/// Dense position of a vertex inside EdgeListGraph::vertices().
using VertexIndex = std::uint32_t;

struct Edge {
    VertexId src = 0;
    VertexId dst = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed multigraph stored as an edge array plus a degree table.
///
/// Degree is total degree: every edge slot incident to v counts, so a self-loop
/// adds 2. Vertices are exactly the labels that appear as an endpoint; there is
/// no notion of an isolated vertex. The graph also keeps a dense index for each
/// endpoint and an incidence list (edge slots per vertex) so that metric and
/// simulation passes do not need hash lookups.
class EdgeListGraph {
public:
    /// Throws EmptyGraph when `edges` is empty. Edge order is preserved.
    explicit EdgeListGraph(std::vector<Edge> edges);

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    /// Distinct labels in ascending order.
    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    /// Degrees aligned with vertices().
    std::span<const std::uint64_t> degrees() const noexcept { return degrees_; }

    /// Degree of `v`, or 0 when `v` is not an endpoint of any edge.
    std::uint64_t degree(VertexId v) const;
    bool contains(VertexId v) const;
    /// Throws ParameterError when `v` is not a vertex of the graph.
    VertexIndex index_of(VertexId v) const;

    VertexIndex src_index(std::size_t e) const { return src_index_[e]; }
    VertexIndex dst_index(std::size_t e) const { return dst_index_[e]; }
    std::uint64_t src_degree(std::size_t e) const { return degrees_[src_index_[e]]; }
    std::uint64_t dst_degree(std::size_t e) const { return degrees_[dst_index_[e]]; }

    /// Edge indices incident to the vertex at `i`, ascending. A self-loop is listed twice.
    std::span<const std::size_t> incident_edges(VertexIndex i) const {
        return {incidence_.data() + incidence_offsets_[i],
                incidence_offsets_[i + 1] - incidence_offsets_[i]};
    }

    /// Number of edges whose source is the vertex at `i` (self-loops count once).
    std::uint64_t out_degree(VertexIndex i) const { return out_degrees_[i]; }

    std::uint64_t min_degree() const noexcept { return min_degree_; }
    std::uint64_t max_degree() const noexcept { return max_degree_; }

private:
    std::vector<Edge> edges_;
    std::vector<VertexId> vertices_;
    std::vector<std::uint64_t> degrees_;
    std::vector<std::uint64_t> out_degrees_;
    std::vector<VertexIndex> src_index_;
    std::vector<VertexIndex> dst_index_;
    std::vector<std::size_t> incidence_offsets_;
    std::vector<std::size_t> incidence_;
    std::uint64_t min_degree_ = 0;
    std::uint64_t max_degree_ = 0;
};

inline EdgeListGraph build_graph(std::vector<Edge> edges) { return EdgeListGraph(std::move(edges)); }

/// Per-edge partition ids, aligned index-for-index with the graph's edge array.
class PartitionAssignment {
public:
    /// Throws ParameterError if `num_parts` is 0 or any id is out of range.
    PartitionAssignment(PartId num_parts, std::vector<PartId> part_of);

    PartId num_parts() const noexcept { return num_parts_; }
    std::span<const PartId> part_of() const noexcept { return part_of_; }
    PartId operator[](std::size_t e) const { return part_of_[e]; }
    std::size_t size() const noexcept { return part_of_.size(); }

    friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;

private:
    PartId num_parts_;
    std::vector<PartId> part_of_;
};

/// Throws LengthMismatch when `a` was not produced for `g`.
void check_aligned(const EdgeListGraph& g, const PartitionAssignment& a);

/// Edge count per partition; empty partitions report 0.
std::vector<std::uint64_t> partition_sizes(const EdgeListGraph& g, const PartitionAssignment& a);

}  // namespace edgecut
