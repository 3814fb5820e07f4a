#include "edgecut/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "edgecut/error.hpp"

namespace edgecut {
namespace {

constexpr double kRelativeSlack = 1e-9;

bool leq_with_slack(double lhs, double rhs) {
    return lhs <= rhs + kRelativeSlack * std::max(std::abs(lhs), std::abs(rhs));
}

double replica_expectation(double exponent, PartId m) {
    return 1.0 - std::pow(1.0 - 1.0 / static_cast<double>(m), exponent);
}

}  // namespace

double expected_rf_random(std::span<const std::uint64_t> degrees, PartId m) {
    if (m < 1) throw ParameterError("number of partitions must be at least 1");
    if (degrees.empty()) throw ParameterError("degree sequence is empty");
    double sum = 0.0;
    for (const std::uint64_t d : degrees) sum += replica_expectation(static_cast<double>(d), m);
    return static_cast<double>(m) / static_cast<double>(degrees.size()) * sum;
}

std::uint64_t DbhStats::h_total() const { return std::accumulate(h.begin(), h.end(), std::uint64_t{0}); }

DbhStats compute_dbh_stats(const EdgeListGraph& g, const PartitionerSpec& rule) {
    rule.validate();
    DbhStats stats;
    stats.h.assign(g.vertex_count(), 0);
    stats.degree.assign(g.degrees().begin(), g.degrees().end());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Endpoint chosen = hashed_endpoint(g.edge(e), g.src_degree(e), g.dst_degree(e), rule);
        ++stats.h[chosen == Endpoint::Source ? g.dst_index(e) : g.src_index(e)];
    }
    stats.g.resize(g.vertex_count());
    for (std::size_t i = 0; i < stats.h.size(); ++i) stats.g[i] = stats.h[i] < stats.degree[i] ? 1 : 0;
    return stats;
}

DbhStats dbh_stats_from_trace(const EdgeListGraph& g, std::span<const Endpoint> hashed_by) {
    if (hashed_by.size() != g.edge_count()) throw LengthMismatch(g.edge_count(), hashed_by.size());
    DbhStats stats;
    stats.h.assign(g.vertex_count(), 0);
    stats.degree.assign(g.degrees().begin(), g.degrees().end());
    // An edge is decentral for v exactly when the other endpoint was chosen.
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        std::size_t previous = std::numeric_limits<std::size_t>::max();
        for (const std::size_t e : g.incident_edges(v)) {
            if (e == previous) continue;  // second slot of a self-loop
            previous = e;
            if (g.src_index(e) == g.dst_index(e)) {
                ++stats.h[v];
                continue;
            }
            const VertexIndex chosen = hashed_by[e] == Endpoint::Source ? g.src_index(e) : g.dst_index(e);
            if (chosen != v) ++stats.h[v];
        }
    }
    stats.g.resize(g.vertex_count());
    for (std::size_t i = 0; i < stats.h.size(); ++i) stats.g[i] = stats.h[i] < stats.degree[i] ? 1 : 0;
    return stats;
}

RfDbhEstimate expected_rf_dbh(const DbhStats& stats, PartId m) {
    if (m < 1) throw ParameterError("number of partitions must be at least 1");
    if (stats.h.size() != stats.degree.size() || stats.g.size() != stats.degree.size() || stats.h.empty()) {
        throw InvalidStats("stats vectors are empty or misaligned");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < stats.h.size(); ++i) {
        if (stats.h[i] > stats.degree[i]) throw InvalidStats("h exceeds degree at vertex index " + std::to_string(i));
        sum += replica_expectation(static_cast<double>(stats.h[i] + stats.g[i]), m);
    }
    RfDbhEstimate out;
    out.expected = static_cast<double>(m) / static_cast<double>(stats.h.size()) * sum;
    out.upper_bound = expected_rf_random(stats.degree, m);
    if (!leq_with_slack(out.expected, out.upper_bound)) {
        throw InvariantViolation("expected DBH replication factor exceeds the random expectation");
    }
    return out;
}

double b_zeta(double alpha, std::uint64_t d_min, std::uint64_t d_max) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (d_min < 1) throw DomainError("d_min must be at least 1");
    double sum = 0.0;
    // Smallest terms first.
    for (std::uint64_t x = d_max; x >= d_min && x >= 1; --x) {
        sum += std::pow(static_cast<double>(x), -alpha);
        if (x == d_min) break;
    }
    return sum;
}

ZetaBracket b_zeta_bracket(double alpha, std::uint64_t d_min, std::uint64_t d_max) {
    if (alpha == 1.0) throw AlphaOne();
    if (d_max < d_min) throw DomainError("d_max must be >= d_min");
    const double lo = static_cast<double>(d_min);
    const double hi = static_cast<double>(d_max);
    const double e = 1.0 - alpha;
    ZetaBracket z;
    z.exact = b_zeta(alpha, d_min, d_max);
    z.lower = (std::pow(lo, e) - std::pow(hi + 1.0, e)) / (alpha - 1.0);
    z.upper = (std::pow(lo, e) - std::pow(hi, e)) / (alpha - 1.0) + std::pow(lo, -alpha);
    return z;
}

BiBounds bi_bounds(double alpha, std::uint64_t d_min, std::uint64_t d_max, std::uint64_t d_i) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (d_min < 1 || d_i < d_min || d_i > d_max) throw DomainError("degree must satisfy 1 <= d_min <= d_i <= d_max");

    const double total = b_zeta(alpha, d_min, d_max);
    BiBounds b;
    b.exact_lower = d_i == d_min ? 0.0 : b_zeta(alpha, d_min, d_i - 1) / total;
    b.exact_upper = b_zeta(alpha, d_min, d_i) / total;

    if (alpha > 1.0) {
        const double e = 1.0 - alpha;
        const double lo = static_cast<double>(d_min);
        const double di = static_cast<double>(d_i);
        b.corollary_lower = (1.0 - std::pow(di / lo, e)) / alpha;
        b.closed_form_upper_numerator = std::pow(lo, e) - std::pow(di, e) + (alpha - 1.0) * std::pow(lo, -alpha);
        b.closed_form_upper =
            b.closed_form_upper_numerator / (std::pow(lo, e) - std::pow(static_cast<double>(d_max) + 1.0, e));
        if (!leq_with_slack(b.corollary_lower, b.exact_lower)) {
            throw InvariantViolation("corollary lower bound exceeds the exact lower ratio");
        }
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        b.corollary_lower = b.closed_form_upper = b.closed_form_upper_numerator = nan;
    }
    return b;
}

double bi_threshold_degree(double alpha, std::uint64_t d_min) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("threshold degree needs 1 < alpha < 2");
    return static_cast<double>(d_min) * std::pow(1.0 - alpha / 2.0, -1.0 / (alpha - 1.0));
}

BoundCheck check_rf_msids_bound(const PartitionReport& report) {
    __extension__ using Wide = unsigned __int128;
    const Wide lhs = static_cast<Wide>(report.replica_total) * report.msids * report.num_parts;
    const Wide rhs = static_cast<Wide>(4) * report.edge_count * report.edge_count;
    BoundCheck check;
    check.lhs = report.replication_factor * static_cast<double>(report.msids);
    check.rhs = 4.0 * static_cast<double>(report.edge_count) * static_cast<double>(report.edge_count) /
                (static_cast<double>(report.num_parts) * static_cast<double>(report.vertex_count));
    check.holds = lhs >= rhs;
    return check;
}

std::vector<BiBucket> validate_bi_empirically(const EdgeListGraph& g, const PartitionerSpec& rule, double alpha,
                                              std::vector<std::pair<std::uint64_t, std::uint64_t>> buckets) {
    const std::uint64_t d_min = g.min_degree();
    const std::uint64_t d_max = g.max_degree();
    if (buckets.empty()) {
        for (std::uint64_t low = 1; low <= d_max; low *= 2) buckets.emplace_back(low, 2 * low - 1);
    }

    const DbhStats stats = compute_dbh_stats(g, rule);
    std::vector<BiBucket> table;
    for (const auto& [low, high] : buckets) {
        if (high < low) throw ParameterError("bucket upper edge below lower edge");
        BiBucket bucket{low, high};
        double sum = 0.0;
        for (std::size_t i = 0; i < stats.degree.size(); ++i) {
            if (stats.degree[i] >= low && stats.degree[i] <= high) {
                ++bucket.count;
                sum += stats.empirical_b(i);
            }
        }
        if (bucket.count == 0) continue;
        bucket.empirical_b = sum / static_cast<double>(bucket.count);
        const std::uint64_t lo_deg = std::clamp(low, d_min, d_max);
        const std::uint64_t hi_deg = std::clamp(high, d_min, d_max);
        const BiBounds at_low = bi_bounds(alpha, d_min, d_max, lo_deg);
        bucket.corollary_lower = at_low.corollary_lower;
        bucket.exact_lower = at_low.exact_lower;
        bucket.exact_upper = bi_bounds(alpha, d_min, d_max, hi_deg).exact_upper;
        table.push_back(bucket);
    }
    return table;
}

TheoryEstimate estimate_theory(const EdgeListGraph& g, PartId m, double alpha) {
    TheoryEstimate t;
    t.expected_rf_random = expected_rf_random(g.degrees(), m);
    PartitionerSpec dbh;
    dbh.strategy = Strategy::DBH;
    dbh.num_parts = m;
    t.expected_rf_dbh = expected_rf_dbh(compute_dbh_stats(g, dbh), m).expected;
    t.b_zeta = b_zeta(alpha, g.min_degree(), g.max_degree());

    std::vector<std::uint64_t> distinct(g.degrees().begin(), g.degrees().end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const std::uint64_t d : distinct) {
        const BiBounds b = bi_bounds(alpha, g.min_degree(), g.max_degree(), d);
        t.curve_degrees.push_back(d);
        t.bi_lower.push_back(b.exact_lower);
        t.bi_upper.push_back(b.exact_upper);
    }
    return t;
}

}  // namespace edgecut
