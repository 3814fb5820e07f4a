#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgecut/graph.hpp"
#include "edgecut/metrics.hpp"
#include "edgecut/partitioners.hpp"

namespace edgecut {

/// Expected replication factor of a uniformly random edge assignment:
/// (m / |V|) * sum_i (1 - (1 - 1/m)^{d_i}).
double expected_rf_random(std::span<const std::uint64_t> degrees, PartId m);

/// Decentral-hash counts of a single-endpoint hashing rule.
///
/// h[i] counts edges at vertex i that were hashed by the neighbor's id; g[i] is
/// 1 when at least one edge at i was hashed by i itself. A self-loop is hashed
/// by its only vertex and counts once toward h. Aligned with EdgeListGraph::vertices().
struct DbhStats {
    std::vector<std::uint64_t> h;
    std::vector<std::uint64_t> degree;
    std::vector<std::uint8_t> g;

    double empirical_b(std::size_t i) const {
        return static_cast<double>(h[i]) / static_cast<double>(degree[i]);
    }
    std::uint64_t h_total() const;
};

/// Analytic path: applies the rule to the degree table, edge by edge.
DbhStats compute_dbh_stats(const EdgeListGraph& g, const PartitionerSpec& rule);

/// Empirical path: counts from the endpoints recorded during partitioning.
DbhStats dbh_stats_from_trace(const EdgeListGraph& g, std::span<const Endpoint> hashed_by);

struct RfDbhEstimate {
    double expected = 0.0;     ///< (m/|V|) sum_i (1 - (1-1/m)^{h_i + g_i})
    double upper_bound = 0.0;  ///< the random-assignment expectation on the same degrees
};

/// Throws InvalidStats if some h_i > d_i, InvariantViolation if expected > upper_bound.
RfDbhEstimate expected_rf_dbh(const DbhStats& stats, PartId m);

/// B(alpha, d_min, d_max) = sum_{x=d_min}^{d_max} x^-alpha, summed exactly.
double b_zeta(double alpha, std::uint64_t d_min, std::uint64_t d_max);

struct ZetaBracket {
    double exact = 0.0;
    double lower = 0.0;  ///< (d_min^{1-a} - (d_max+1)^{1-a}) / (a-1)
    double upper = 0.0;  ///< (d_min^{1-a} - d_max^{1-a}) / (a-1) + d_min^{-a}
};

/// Exact sum with its integral bracket. Throws AlphaOne when alpha == 1.
ZetaBracket b_zeta_bracket(double alpha, std::uint64_t d_min, std::uint64_t d_max);

/// Bounds on b_i, the probability that an edge at a degree-d_i vertex is
/// hashed by the neighbor under DBH on a power-law degree distribution.
/// Closed forms are NaN unless alpha > 1.
struct BiBounds {
    double exact_lower = 0.0;           ///< B(a, d_min, d_i - 1) / B(a, d_min, d_max)
    double exact_upper = 0.0;           ///< B(a, d_min, d_i) / B(a, d_min, d_max)
    double corollary_lower = 0.0;       ///< (1 - (d_i/d_min)^{1-a}) / a
    double closed_form_upper = 0.0;     ///< integral-bound ratio above exact_upper
    double closed_form_upper_numerator = 0.0;
};

/// Throws DomainError unless d_min <= d_i <= d_max and alpha > 0.
/// Throws InvariantViolation if corollary_lower exceeds exact_lower.
BiBounds bi_bounds(double alpha, std::uint64_t d_min, std::uint64_t d_max, std::uint64_t d_i);

/// d_min * (1 - alpha/2)^{-1/(alpha-1)}; degrees above it have corollary_lower > 0.5.
/// Throws DomainError unless 1 < alpha < 2.
double bi_threshold_degree(double alpha, std::uint64_t d_min);

struct BoundCheck {
    double lhs = 0.0;  ///< RF * MSIDS
    double rhs = 0.0;  ///< 4 |E|^2 / (m |V|)
    bool holds = false;
};

/// Decided in exact integer arithmetic: replica_total * msids * m >= 4 |E|^2.
BoundCheck check_rf_msids_bound(const PartitionReport& report);

struct BiBucket {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    std::uint64_t count = 0;
    double empirical_b = 0.0;  ///< mean of h_i / d_i over vertices in the bucket
    double corollary_lower = 0.0;
    double exact_lower = 0.0;
    double exact_upper = 0.0;
};

/// Buckets vertices by degree and compares the measured decentral-hash fraction
/// with the power-law bounds. Bounds are evaluated at the bucket's lowest
/// admissible degree (lower bounds) and highest (upper bound). Empty buckets are
/// dropped. With no buckets given, uses [1,1], [2,3], [4,7], ... up to d_max.
std::vector<BiBucket> validate_bi_empirically(const EdgeListGraph& g, const PartitionerSpec& rule, double alpha,
                                              std::vector<std::pair<std::uint64_t, std::uint64_t>> buckets = {});

/// Summary of the expected-RF formulas and b_i curves for one graph.
struct TheoryEstimate {
    double expected_rf_random = 0.0;
    double expected_rf_dbh = 0.0;
    std::vector<std::uint64_t> curve_degrees;  ///< distinct degrees of the graph
    std::vector<double> bi_lower;
    std::vector<double> bi_upper;
    double b_zeta = 0.0;
};

TheoryEstimate estimate_theory(const EdgeListGraph& g, PartId m, double alpha);

}  // namespace edgecut
