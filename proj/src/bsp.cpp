#include "edgecut/bsp.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "edgecut/error.hpp"

namespace edgecut {
namespace {

std::vector<std::vector<std::size_t>> edges_by_partition(const EdgeListGraph& g, const PartitionAssignment& a) {
    check_aligned(g, a);
    std::vector<std::vector<std::size_t>> out(a.num_parts());
    for (std::size_t e = 0; e < g.edge_count(); ++e) out[a[e]].push_back(e);
    return out;
}

// Label counts of one partition, keyed by (vertex, label) with both as dense indices.
class PartitionCombiner {
public:
    explicit PartitionCombiner(std::size_t vertices) : keys_(vertices, 0) {}

    /// Folds a single-key message {label: 1} into the accumulator of `v`.
    /// Returns the merge operations charged.
    std::uint64_t fold(VertexIndex v, VertexIndex label) {
        const std::uint64_t key = (static_cast<std::uint64_t>(v) << 32) | label;
        auto [it, inserted] = counts_.try_emplace(key, 0);
        ++it->second;
        std::uint64_t ops = 0;
        if (keys_[v] > 0) ops = keys_[v] + (inserted ? 1 : 0);
        if (keys_[v] == 0) touched_.push_back(v);
        if (inserted) ++keys_[v];
        return ops;
    }

    template <typename Sink>
    void drain(Sink&& sink) {
        for (const auto& [key, count] : counts_) {
            sink(static_cast<VertexIndex>(key >> 32), static_cast<VertexIndex>(key & 0xffffffffu), count);
        }
        counts_.clear();
        for (const VertexIndex v : touched_) keys_[v] = 0;
        touched_.clear();
    }

private:
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
    std::vector<std::uint32_t> keys_;
    std::vector<VertexIndex> touched_;
};

struct LabelCount {
    VertexIndex vertex;
    VertexIndex label;
    std::uint64_t count;
};

}  // namespace

std::uint64_t SuperstepTrace::max_merge_ops() const {
    return merge_ops.empty() ? 0 : *std::max_element(merge_ops.begin(), merge_ops.end());
}

AlgoResult<VertexId> run_lpa(const EdgeListGraph& g, const PartitionAssignment& a, std::size_t iterations) {
    if (iterations < 1) throw ParameterError("iterations must be at least 1");
    const auto parts = edges_by_partition(g, a);
    const std::size_t n = g.vertex_count();

    std::vector<VertexIndex> label(n);
    for (VertexIndex v = 0; v < n; ++v) label[v] = v;

    AlgoResult<VertexId> result;
    PartitionCombiner combiner(n);
    std::vector<LabelCount> partials;
    for (std::size_t step = 0; step < iterations; ++step) {
        SuperstepTrace trace;
        trace.step = step;
        trace.merge_ops.assign(a.num_parts(), 0);
        trace.messages_in.assign(a.num_parts(), 0);
        trace.active_vertices = n;

        partials.clear();
        for (PartId p = 0; p < a.num_parts(); ++p) {
            for (const std::size_t e : parts[p]) {
                const VertexIndex s = g.src_index(e);
                const VertexIndex d = g.dst_index(e);
                trace.merge_ops[p] += combiner.fold(s, label[d]);
                trace.merge_ops[p] += combiner.fold(d, label[s]);
                trace.messages_in[p] += 2;
            }
            combiner.drain([&](VertexIndex v, VertexIndex l, std::uint64_t c) { partials.push_back({v, l, c}); });
        }

        // Global combine: sum partials per (vertex, label), then pick the winner.
        std::sort(partials.begin(), partials.end(), [](const LabelCount& x, const LabelCount& y) {
            return x.vertex != y.vertex ? x.vertex < y.vertex : x.label < y.label;
        });
        std::vector<VertexIndex> next(label);
        std::size_t i = 0;
        while (i < partials.size()) {
            const VertexIndex v = partials[i].vertex;
            VertexIndex best = 0;
            std::uint64_t best_count = 0;
            while (i < partials.size() && partials[i].vertex == v) {
                const VertexIndex l = partials[i].label;
                std::uint64_t c = 0;
                while (i < partials.size() && partials[i].vertex == v && partials[i].label == l) c += partials[i++].count;
                if (c > best_count) {  // ascending labels, so ties keep the smaller one
                    best = l;
                    best_count = c;
                }
            }
            next[v] = best;
        }
        label.swap(next);
        result.traces.push_back(std::move(trace));
    }

    result.values.resize(n);
    for (VertexIndex v = 0; v < n; ++v) result.values[v] = g.vertices()[label[v]];
    return result;
}

AlgoResult<double> run_pagerank(const EdgeListGraph& g, const PartitionAssignment& a, double tol,
                                std::size_t max_iter) {
    if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
    if (max_iter < 1) throw ParameterError("max iterations must be at least 1");
    const auto parts = edges_by_partition(g, a);
    const std::size_t n = g.vertex_count();
    const double nd = static_cast<double>(n);

    std::vector<double> rank(n, 1.0);
    std::vector<double> contrib(n);
    std::vector<double> partial(n, 0.0);
    std::vector<std::uint64_t> received(n, 0);
    std::vector<VertexIndex> touched;

    AlgoResult<double> result;
    result.converged = false;
    for (std::size_t step = 0; step < max_iter; ++step) {
        SuperstepTrace trace;
        trace.step = step;
        trace.merge_ops.assign(a.num_parts(), 0);
        trace.messages_in.assign(a.num_parts(), 0);
        trace.active_vertices = n;

        std::fill(contrib.begin(), contrib.end(), 0.0);
        for (PartId p = 0; p < a.num_parts(); ++p) {
            for (const std::size_t e : parts[p]) {
                const VertexIndex s = g.src_index(e);
                const VertexIndex d = g.dst_index(e);
                const double msg = rank[s] / static_cast<double>(g.out_degree(s));
                if (received[d]++ == 0) {
                    touched.push_back(d);
                    partial[d] = msg;
                } else {
                    partial[d] += msg;
                    ++trace.merge_ops[p];
                }
                ++trace.messages_in[p];
            }
            for (const VertexIndex v : touched) {
                contrib[v] += partial[v];
                received[v] = 0;
            }
            touched.clear();
        }

        double dangling = 0.0;
        for (VertexIndex v = 0; v < n; ++v) {
            if (g.out_degree(v) == 0) dangling += rank[v];
        }

        double delta = 0.0;
        for (VertexIndex v = 0; v < n; ++v) {
            const double next = (1.0 - kPageRankDamping) + kPageRankDamping * (contrib[v] + dangling / nd);
            delta += std::abs(next - rank[v]);
            rank[v] = next;
        }
        result.traces.push_back(std::move(trace));
        if (delta < tol) {
            result.converged = true;
            break;
        }
    }
    result.values = std::move(rank);
    return result;
}

std::vector<std::uint64_t> merge_cost_model(const PartitionAssignment& a, const EdgeListGraph& g) {
    const auto parts = edges_by_partition(g, a);
    std::vector<std::uint64_t> inner(g.vertex_count(), 0);
    std::vector<VertexIndex> touched;
    std::vector<std::uint64_t> cost(a.num_parts(), 0);
    for (PartId p = 0; p < a.num_parts(); ++p) {
        for (const std::size_t e : parts[p]) {
            for (const VertexIndex v : {g.src_index(e), g.dst_index(e)}) {
                if (inner[v]++ == 0) touched.push_back(v);
            }
        }
        for (const VertexIndex v : touched) {
            cost[p] += inner[v] * (inner[v] + 1) / 2;
            inner[v] = 0;
        }
        touched.clear();
    }
    return cost;
}

std::vector<std::vector<std::uint64_t>> instrumented_merge_counts(const std::vector<SuperstepTrace>& traces) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(traces.size());
    for (const SuperstepTrace& t : traces) out.push_back(t.merge_ops);
    return out;
}

}  // namespace edgecut
