#include "edgecut/partitioners.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <thread>

#include "edgecut/error.hpp"

namespace edgecut {
namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

PartId isqrt_ceil(PartId m) {
    auto r = static_cast<PartId>(std::sqrt(static_cast<double>(m)));
    while (static_cast<std::uint64_t>(r) * r > m) --r;
    while (static_cast<std::uint64_t>(r) * r < m) ++r;
    return r;
}

// Per-edge rule shared by the sequential and chunked drivers.
class EdgeRule {
public:
    EdgeRule(const EdgeListGraph& g, const PartitionerSpec& spec)
        : g_(g), spec_(spec), grid_(spec.strategy == Strategy::Edge2D ? isqrt_ceil(spec.num_parts) : 1) {}

    PartId operator()(std::size_t e) const {
        const Edge& edge = g_.edge(e);
        const PartId m = spec_.num_parts;
        switch (spec_.strategy) {
            case Strategy::Random: {
                const std::uint64_t x = splitmix64(spec_.seed ^ splitmix64(e));
                return static_cast<PartId>((static_cast<Wide>(x) * m) >> 64);
            }
            case Strategy::SourceHash:
                return vertex_hash(edge.src, m, spec_.hash);
            case Strategy::Edge2D: {
                const PartId cell = vertex_hash(edge.src, grid_, spec_.hash) * grid_ +
                                    vertex_hash(edge.dst, grid_, spec_.hash);
                return cell < m ? cell : cell % m;
            }
            case Strategy::DBH: {
                const Endpoint by = hashed_endpoint(edge, g_.src_degree(e), g_.dst_degree(e), spec_);
                return vertex_hash(by == Endpoint::Source ? edge.src : edge.dst, m, spec_.hash);
            }
            case Strategy::DBHX: {
                const PartRange range =
                    dbhx_set_range(dbhx_which_set(edge.src, edge.dst, spec_.spread), m, spec_.spread);
                const Endpoint by = hashed_endpoint(edge, g_.src_degree(e), g_.dst_degree(e), spec_);
                return range.base +
                       vertex_hash(by == Endpoint::Source ? edge.src : edge.dst, range.size, spec_.hash);
            }
        }
        return 0;
    }

private:
    const EdgeListGraph& g_;
    const PartitionerSpec& spec_;
    PartId grid_;
};

PartitionAssignment run(const EdgeListGraph& g, const PartitionerSpec& spec, Strategy expected) {
    spec.validate();
    if (spec.strategy != expected) {
        throw ParameterError("spec selects " + std::string(to_string(spec.strategy)) + ", expected " +
                             std::string(to_string(expected)));
    }
    return partition(g, spec, 1);
}

}  // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Random: return "random";
        case Strategy::SourceHash: return "source-hash";
        case Strategy::Edge2D: return "edge2d";
        case Strategy::DBH: return "dbh";
        case Strategy::DBHX: return "dbhx";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "random") return Strategy::Random;
    if (lower == "source-hash" || lower == "sourcehash") return Strategy::SourceHash;
    if (lower == "edge2d") return Strategy::Edge2D;
    if (lower == "dbh") return Strategy::DBH;
    if (lower == "dbhx" || lower == "dbh-x") return Strategy::DBHX;
    throw ParameterError("unknown strategy '" + std::string(name) + "'");
}

void PartitionerSpec::validate() const {
    if (num_parts < 1) throw ParameterError("number of partitions must be at least 1");
    if (std::isnan(tau) || tau < 0.0) throw ParameterError("tau must be >= 0");
    if (spread < 1) throw ParameterError("spread must be at least 1");
    if (spread > num_parts) throw SpreadTooLarge(spread, num_parts);
}

std::string PartitionerSpec::describe() const {
    std::ostringstream out;
    out << to_string(strategy) << " m=" << num_parts;
    if (strategy == Strategy::DBHX) out << " tau=" << tau << " spread=" << spread;
    if (strategy == Strategy::Random) out << " seed=" << seed;
    if (hash == HashMode::Mixing) out << " mixing-hash";
    return out.str();
}

PartId vertex_hash(VertexId v, PartId m, HashMode mode) {
    if (mode == HashMode::Mixing) {
        v *= 0x9e3779b97f4a7c15ULL;
        v ^= v >> 32;
    }
    return static_cast<PartId>(v % m);
}

PartRange dbhx_set_range(PartId s, PartId m, PartId spread) {
    const PartId per_set = m / spread;
    const PartId extra = m % spread;
    return {s * per_set + std::min(s, extra), per_set + (s < extra ? 1 : 0)};
}

PartId dbhx_which_set(VertexId src, VertexId dst, PartId spread) {
    return static_cast<PartId>((src % spread + dst % spread) % spread);
}

Endpoint hashed_endpoint(const Edge& e, std::uint64_t src_degree, std::uint64_t dst_degree,
                         const PartitionerSpec& spec) {
    switch (spec.strategy) {
        case Strategy::SourceHash:
            return Endpoint::Source;
        case Strategy::DBH:
            // Ties fall to the destination.
            return src_degree < dst_degree ? Endpoint::Source : Endpoint::Destination;
        case Strategy::DBHX: {
            const bool high = static_cast<double>(src_degree) > spec.tau ||
                              static_cast<double>(dst_degree) > spec.tau;
            if (high) return src_degree <= dst_degree ? Endpoint::Source : Endpoint::Destination;
            return e.src <= e.dst ? Endpoint::Source : Endpoint::Destination;
        }
        case Strategy::Random:
        case Strategy::Edge2D:
            break;
    }
    throw ParameterError(std::string(to_string(spec.strategy)) + " does not hash by a single endpoint");
}

PartitionAssignment partition_random(const EdgeListGraph& g, const PartitionerSpec& spec) {
    return run(g, spec, Strategy::Random);
}
PartitionAssignment partition_source_hash(const EdgeListGraph& g, const PartitionerSpec& spec) {
    return run(g, spec, Strategy::SourceHash);
}
PartitionAssignment partition_edge2d(const EdgeListGraph& g, const PartitionerSpec& spec) {
    return run(g, spec, Strategy::Edge2D);
}
PartitionAssignment partition_dbh(const EdgeListGraph& g, const PartitionerSpec& spec) {
    return run(g, spec, Strategy::DBH);
}
PartitionAssignment partition_dbhx(const EdgeListGraph& g, const PartitionerSpec& spec) {
    return run(g, spec, Strategy::DBHX);
}

PartitionAssignment partition(const EdgeListGraph& g, const PartitionerSpec& spec, unsigned threads) {
    spec.validate();
    const EdgeRule rule(g, spec);
    const std::size_t n = g.edge_count();
    std::vector<PartId> part_of(n);

    const auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) part_of[e] = rule(e);
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(n, 1024))));
    if (threads == 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            workers.emplace_back(fill, begin, std::min(n, begin + chunk));
        }
    }
    return PartitionAssignment(spec.num_parts, std::move(part_of));
}

TracedAssignment partition_traced(const EdgeListGraph& g, const PartitionerSpec& spec) {
    spec.validate();
    std::vector<Endpoint> hashed_by(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        hashed_by[e] = hashed_endpoint(g.edge(e), g.src_degree(e), g.dst_degree(e), spec);
    }
    return {partition(g, spec, 1), std::move(hashed_by)};
}

}  // namespace edgecut
