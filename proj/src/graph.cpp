#include "edgecut/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "edgecut/error.hpp"

namespace edgecut {

EdgeListGraph::EdgeListGraph(std::vector<Edge> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) {
        throw EmptyGraph();
    }

    vertices_.reserve(edges_.size());
    for (const Edge& e : edges_) {
        vertices_.push_back(e.src);
        vertices_.push_back(e.dst);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    vertices_.shrink_to_fit();
    if (vertices_.size() > std::numeric_limits<VertexIndex>::max()) {
        throw ParameterError("too many distinct vertices");
    }

    const std::size_t n = vertices_.size();
    degrees_.assign(n, 0);
    out_degrees_.assign(n, 0);
    src_index_.resize(edges_.size());
    dst_index_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const VertexIndex s = index_of(edges_[e].src);
        const VertexIndex d = index_of(edges_[e].dst);
        src_index_[e] = s;
        dst_index_[e] = d;
        ++degrees_[s];
        ++degrees_[d];
        ++out_degrees_[s];
    }

    incidence_offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        incidence_offsets_[i + 1] = incidence_offsets_[i] + degrees_[i];
    }
    incidence_.resize(incidence_offsets_[n]);
    std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        incidence_[cursor[src_index_[e]]++] = e;
        incidence_[cursor[dst_index_[e]]++] = e;
    }

    const auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
    min_degree_ = *lo;
    max_degree_ = *hi;
}

bool EdgeListGraph::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

VertexIndex EdgeListGraph::index_of(VertexId v) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw ParameterError("vertex " + std::to_string(v) + " is not in the graph");
    }
    return static_cast<VertexIndex>(it - vertices_.begin());
}

std::uint64_t EdgeListGraph::degree(VertexId v) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        return 0;
    }
    return degrees_[static_cast<std::size_t>(it - vertices_.begin())];
}

PartitionAssignment::PartitionAssignment(PartId num_parts, std::vector<PartId> part_of)
    : num_parts_(num_parts), part_of_(std::move(part_of)) {
    if (num_parts_ == 0) {
        throw ParameterError("number of partitions must be at least 1");
    }
    for (std::size_t e = 0; e < part_of_.size(); ++e) {
        if (part_of_[e] >= num_parts_) {
            throw ParameterError("edge " + std::to_string(e) + " assigned to partition " +
                                 std::to_string(part_of_[e]) + " but only " + std::to_string(num_parts_) +
                                 " partitions exist");
        }
    }
}

void check_aligned(const EdgeListGraph& g, const PartitionAssignment& a) {
    if (a.size() != g.edge_count()) {
        throw LengthMismatch(g.edge_count(), a.size());
    }
}

std::vector<std::uint64_t> partition_sizes(const EdgeListGraph& g, const PartitionAssignment& a) {
    check_aligned(g, a);
    std::vector<std::uint64_t> sizes(a.num_parts(), 0);
    for (const PartId p : a.part_of()) {
        ++sizes[p];
    }
    return sizes;
}

}  // namespace edgecut
