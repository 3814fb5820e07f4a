#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut {

enum class Strategy { Random, SourceHash, Edge2D, DBH, DBHX };

std::string_view to_string(Strategy s);
/// Accepts "random", "source-hash", "edge2d", "dbh", "dbhx" (case-insensitive).
Strategy parse_strategy(std::string_view name);

/// Identity is `v mod m`. Mixing scrambles the id first, for inputs whose
/// numbering aliases with the modulus.
enum class HashMode { Identity, Mixing };

inline constexpr double kTauInfinity = std::numeric_limits<double>::infinity();

struct PartitionerSpec {
    Strategy strategy = Strategy::DBH;
    PartId num_parts = 1;
    double tau = 0.0;            ///< DBHX: edges whose endpoints both have degree <= tau hash by smaller id
    PartId spread = 1;           ///< DBHX: number of partition sets
    std::uint64_t seed = 0;      ///< Random only
    HashMode hash = HashMode::Identity;

    /// Throws ParameterError, or SpreadTooLarge when spread > num_parts.
    void validate() const;
    std::string describe() const;
};

PartId vertex_hash(VertexId v, PartId m, HashMode mode = HashMode::Identity);

/// Contiguous block of partitions owned by one DBHX set.
struct PartRange {
    PartId base = 0;
    PartId size = 0;
};

/// Set `s` of `spread` over `m` partitions. The first (m mod spread) sets own one extra partition.
PartRange dbhx_set_range(PartId s, PartId m, PartId spread);

/// (src + dst) mod spread, computed without overflow.
PartId dbhx_which_set(VertexId src, VertexId dst, PartId spread);

/// Endpoint whose id an edge was hashed by. Only meaningful for the
/// single-endpoint strategies: SourceHash, DBH and DBHX.
enum class Endpoint : std::uint8_t { Source, Destination };

Endpoint hashed_endpoint(const Edge& e, std::uint64_t src_degree, std::uint64_t dst_degree,
                         const PartitionerSpec& spec);

PartitionAssignment partition_random(const EdgeListGraph& g, const PartitionerSpec& spec);
PartitionAssignment partition_source_hash(const EdgeListGraph& g, const PartitionerSpec& spec);
PartitionAssignment partition_edge2d(const EdgeListGraph& g, const PartitionerSpec& spec);
PartitionAssignment partition_dbh(const EdgeListGraph& g, const PartitionerSpec& spec);
PartitionAssignment partition_dbhx(const EdgeListGraph& g, const PartitionerSpec& spec);

/// Dispatches on spec.strategy. With threads > 1 the edge array is split into
/// contiguous chunks; the result is identical to the sequential run.
PartitionAssignment partition(const EdgeListGraph& g, const PartitionerSpec& spec, unsigned threads = 1);

/// Assignment plus the endpoint each edge was hashed by, recorded while partitioning.
struct TracedAssignment {
    PartitionAssignment assignment;
    std::vector<Endpoint> hashed_by;
};

/// Throws ParameterError for strategies that do not hash by a single endpoint.
TracedAssignment partition_traced(const EdgeListGraph& g, const PartitionerSpec& spec);

}  // namespace edgecut
