#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "edgecut/error.hpp"
#include "edgecut/ingest.hpp"
#include "edgecut/metrics.hpp"
#include "edgecut/partitioners.hpp"
#include "edgecut/theory.hpp"
#include "support.hpp"

namespace edgecut {
namespace {

PartitionerSpec dbh_rule(PartId m) {
    PartitionerSpec spec;
    spec.strategy = Strategy::DBH;
    spec.num_parts = m;
    return spec;
}

TEST(ExpectedRfRandom, ExampleDegrees) {
    const std::vector<std::uint64_t> deg{3, 3, 2, 4, 3, 3};
    const double expected = 0.5 * (4.0 * (1.0 - 8.0 / 27.0) + (1.0 - 4.0 / 9.0) + (1.0 - 16.0 / 81.0));
    EXPECT_NEAR(expected_rf_random(deg, 3), expected, 1e-12);
    EXPECT_NEAR(expected, 2.0864, 1e-4);
    EXPECT_DOUBLE_EQ(expected_rf_random(deg, 1), 1.0);
    const std::vector<std::uint64_t> huge(4, 100000);
    EXPECT_NEAR(expected_rf_random(huge, 5), 5.0, 1e-9);
}

TEST(ExpectedRfRandom, MonteCarlo) {
    // Independent draw: uniform partition per edge, replicas counted with sets.
    const auto edges = testing::example_edges();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<PartId> pick(0, 2);
    double total = 0.0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        std::set<std::pair<VertexId, PartId>> replicas;
        for (const Edge& e : edges) {
            const PartId p = pick(rng);
            replicas.insert({e.src, p});
            replicas.insert({e.dst, p});
        }
        total += static_cast<double>(replicas.size()) / 6.0;
    }
    const std::vector<std::uint64_t> deg{3, 3, 2, 4, 3, 3};
    EXPECT_NEAR(total / trials, expected_rf_random(deg, 3), 0.01);
}

TEST(DbhStats, Star) {
    std::vector<Edge> edges;
    for (VertexId leaf = 1; leaf <= 6; ++leaf) edges.push_back({0, leaf});
    const EdgeListGraph g(edges);
    const auto s = compute_dbh_stats(g, dbh_rule(4));
    EXPECT_EQ(s.h[0], 6u);
    for (std::size_t i = 1; i < s.h.size(); ++i) EXPECT_EQ(s.h[i], 0u);
    EXPECT_EQ(s.g[0], 0u);
    EXPECT_EQ(s.g[1], 1u);
}

TEST(DbhStats, Path) {
    const EdgeListGraph g({{10, 20}, {20, 30}});
    const auto s = compute_dbh_stats(g, dbh_rule(2));
    EXPECT_EQ(s.h, (std::vector<std::uint64_t>{0, 2, 0}));
}

TEST(DbhStats, InfiniteTauCountsSmallerNeighbors) {
    std::mt19937_64 rng(4);
    const auto edges = testing::random_edges(rng, 120, 30);
    const EdgeListGraph g(edges);
    PartitionerSpec rule;
    rule.strategy = Strategy::DBHX;
    rule.num_parts = 4;
    rule.tau = kTauInfinity;
    const auto s = compute_dbh_stats(g, rule);
    for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
        const VertexId v = g.vertices()[i];
        std::uint64_t smaller = 0;
        for (const Edge& e : edges) {
            if (e.src == e.dst) smaller += e.src == v;
            else if (e.src == v) smaller += e.dst < v;
            else if (e.dst == v) smaller += e.src < v;
        }
        ASSERT_EQ(s.h[i], smaller) << v;
    }
}

TEST(DbhStats, AnalyticMatchesTrace) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const EdgeListGraph g(testing::random_edges(rng, 150, 40));
        for (double tau : {0.0, 3.0, kTauInfinity}) {
            PartitionerSpec rule;
            rule.strategy = trial % 2 ? Strategy::DBHX : Strategy::DBH;
            rule.num_parts = 6;
            rule.tau = tau;
            rule.spread = 2;
            const auto traced = partition_traced(g, rule);
            const auto a = compute_dbh_stats(g, rule);
            const auto b = dbh_stats_from_trace(g, traced.hashed_by);
            ASSERT_EQ(a.h, b.h);
            ASSERT_EQ(a.g, b.g);
            ASSERT_EQ(a.h_total(), g.edge_count());
            EXPECT_EQ(traced.assignment, partition(g, rule));
        }
    }
}

TEST(ExpectedRfDbh, Reductions) {
    DbhStats all;
    all.degree = {3, 1, 5};
    all.h = all.degree;
    all.g = {0, 0, 0};
    const auto full = expected_rf_dbh(all, 4);
    EXPECT_NEAR(full.expected, expected_rf_random(all.degree, 4), 1e-12);
    EXPECT_NEAR(full.upper_bound, full.expected, 1e-12);

    DbhStats none;
    none.degree = {3, 1, 5};
    none.h = {0, 0, 0};
    none.g = {1, 1, 1};
    EXPECT_NEAR(expected_rf_dbh(none, 4).expected, 1.0, 1e-12);

    DbhStats bad = none;
    bad.h = {4, 0, 0};
    EXPECT_THROW(expected_rf_dbh(bad, 4), InvalidStats);
}

TEST(ExpectedRfDbh, ExampleBelowRandom) {
    const EdgeListGraph g(testing::example_edges());
    const auto est = expected_rf_dbh(compute_dbh_stats(g, dbh_rule(3)), 3);
    EXPECT_LE(est.expected, est.upper_bound);
    EXPECT_NEAR(est.upper_bound, 2.0864, 1e-4);
}

TEST(BZeta, Values) {
    EXPECT_DOUBLE_EQ(b_zeta(2.0, 1, 2), 1.25);
    EXPECT_DOUBLE_EQ(b_zeta(1.6, 7, 7), std::pow(7.0, -1.6));
    double direct = 0.0;
    for (int x = 1; x <= 1000; ++x) direct += std::pow(x, -1.6);
    const auto z = b_zeta_bracket(1.6, 1, 1000);
    EXPECT_NEAR(z.exact, direct, 1e-12);
    EXPECT_LT(z.lower, z.exact);
    EXPECT_LT(z.exact, z.upper);
    EXPECT_THROW(b_zeta_bracket(1.0, 1, 10), AlphaOne);
    EXPECT_NO_THROW(b_zeta(1.0, 1, 10));
}

TEST(BZeta, BracketSweep) {
    for (double alpha : {1.1, 1.6, 2.0, 2.7}) {
        for (std::uint64_t lo : {1u, 2u, 5u}) {
            for (std::uint64_t hi : {lo + 1, lo + 10, lo + 1000}) {
                const auto z = b_zeta_bracket(alpha, lo, hi);
                EXPECT_LT(z.lower, z.exact);
                EXPECT_LT(z.exact, z.upper);
            }
        }
    }
}

TEST(BiBounds, PublishedValues) {
    const auto b15 = bi_bounds(1.6, 1, 1000, 15);
    EXPECT_NEAR(b15.corollary_lower, (1.0 - std::pow(15.0, -0.6)) / 1.6, 1e-12);
    EXPECT_GT(b15.corollary_lower, 0.5);
    EXPECT_NEAR(b15.corollary_lower, 0.50191, 1e-5);

    EXPECT_EQ(bi_bounds(1.6, 1, 1000, 1).exact_lower, 0.0);

    const auto b3 = bi_bounds(1.6, 1, 1000, 3);
    EXPECT_NEAR(b3.closed_form_upper_numerator, 1.6 - std::pow(3.0, -0.6), 1e-12);
    EXPECT_GT(b3.closed_form_upper_numerator, 1.08);

    EXPECT_THROW(bi_bounds(1.6, 2, 100, 1), DomainError);
    EXPECT_THROW(bi_bounds(1.6, 1, 100, 101), DomainError);
    EXPECT_TRUE(std::isnan(bi_bounds(0.8, 1, 100, 5).corollary_lower));
}

TEST(BiBounds, ChainHoldsEverywhere) {
    for (double alpha : {1.05, 1.3, 1.6, 1.9, 2.5, 3.5}) {
        for (std::uint64_t dmin : {1u, 2u, 3u, 10u}) {
            const std::uint64_t dmax = dmin + 400;
            double previous = -1.0;
            for (std::uint64_t d = dmin; d <= dmax; d += 7) {
                const auto b = bi_bounds(alpha, dmin, dmax, d);
                ASSERT_LE(b.corollary_lower, b.exact_lower * (1 + 1e-9));
                ASSERT_LE(b.exact_lower, b.exact_upper);
                ASSERT_LE(b.exact_upper, b.closed_form_upper * (1 + 1e-9));
                ASSERT_GT(b.exact_lower, previous);
                previous = b.exact_lower;
            }
        }
    }
}

TEST(BiThreshold, Values) {
    EXPECT_NEAR(bi_threshold_degree(1.6, 1), 14.62, 0.01);
    EXPECT_NEAR(bi_threshold_degree(1.6, 2), 2.0 * bi_threshold_degree(1.6, 1), 1e-9);
    EXPECT_GT(bi_threshold_degree(1.2, 1), bi_threshold_degree(1.6, 1));
    EXPECT_NEAR(bi_threshold_degree(1.2, 1), std::pow(0.4, -5.0), 1e-9);
    EXPECT_THROW(bi_threshold_degree(2.0, 1), DomainError);
    EXPECT_THROW(bi_threshold_degree(1.0, 1), DomainError);
    // Just above the threshold the corollary crosses one half.
    const auto t = static_cast<std::uint64_t>(std::floor(bi_threshold_degree(1.6, 1))) + 1;
    EXPECT_GT(bi_bounds(1.6, 1, 1000, t).corollary_lower, 0.5);
    EXPECT_LT(bi_bounds(1.6, 1, 1000, t - 1).corollary_lower, 0.5);
}

TEST(RfMsidsBound, Example) {
    const EdgeListGraph g(testing::example_edges());
    const auto r = full_report(g, PartitionAssignment(3, testing::example_assignment()));
    const auto b = check_rf_msids_bound(r);
    EXPECT_DOUBLE_EQ(b.lhs, 28.0);
    EXPECT_DOUBLE_EQ(b.rhs, 18.0);
    EXPECT_TRUE(b.holds);
}

TEST(RfMsidsBound, FuzzAndSinglePartition) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto edges = testing::random_edges(rng, 100, 50);
        const PartId m = static_cast<PartId>(1 + rng() % 8);
        const EdgeListGraph g(edges);
        ASSERT_TRUE(check_rf_msids_bound(full_report(g, PartitionAssignment(m, testing::random_parts(rng, edges.size(), m)))).holds);
        ASSERT_TRUE(check_rf_msids_bound(full_report(g, PartitionAssignment(1, std::vector<PartId>(edges.size(), 0)))).holds);
    }
}

TEST(RfMsidsBound, ExactComparisonAtEquality) {
    // A perfect matching split evenly: RF = 1, MSIDS = 2|E|/m, so both sides are equal.
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 8; ++i) edges.push_back({2 * i, 2 * i + 1});
    const EdgeListGraph g(edges);
    const auto r = full_report(g, PartitionAssignment(4, {0, 0, 1, 1, 2, 2, 3, 3}));
    EXPECT_EQ(r.replica_total * r.msids * 4, 4u * 8 * 8);
    EXPECT_TRUE(check_rf_msids_bound(r).holds);
}

TEST(ValidateBi, UniformDegreeIsOneHalf) {
    std::vector<Edge> cycle;
    for (VertexId v = 0; v < 50; ++v) cycle.push_back({v, (v + 1) % 50});
    const EdgeListGraph g(cycle);
    const auto table = validate_bi_empirically(g, dbh_rule(4), 1.6, {{2, 2}});
    ASSERT_EQ(table.size(), 1u);
    EXPECT_EQ(table[0].count, 50u);
    EXPECT_DOUBLE_EQ(table[0].empirical_b, 0.5);
}

TEST(ValidateBi, DegreeOneBucketFollowsNeighborDegrees) {
    // A degree-1 vertex is decentral only when its partner also has degree 1 and
    // it sits at the source. The partner of a random stub has degree 1 with the
    // stub share n_1 / 2|E|, so the prediction is half of that.
    PowerLawParams p;
    p.n = 20000;
    p.alpha = 1.6;
    p.seed = 5;
    const auto g = generate_power_law(p);
    const auto deg = g.degrees();
    const double ones = static_cast<double>(std::count(deg.begin(), deg.end(), 1u));
    const double predicted = 0.5 * ones / (2.0 * static_cast<double>(g.edge_count()));
    const auto table = validate_bi_empirically(g, dbh_rule(8), 1.6, {{1, 1}});
    ASSERT_EQ(table.size(), 1u);
    EXPECT_NEAR(table[0].empirical_b, predicted, 0.35 * predicted);
    EXPECT_LT(table[0].empirical_b, 0.5 * ones / static_cast<double>(deg.size()));
}

TEST(ValidateBi, DefaultBucketsAndBounds) {
    PowerLawParams p;
    p.n = 5000;
    p.seed = 2;
    const auto g = generate_power_law(p);
    const auto table = validate_bi_empirically(g, dbh_rule(8), 1.6);
    ASSERT_FALSE(table.empty());
    std::uint64_t counted = 0;
    for (const auto& b : table) {
        counted += b.count;
        EXPECT_EQ(b.high, 2 * b.low - 1);
        EXPECT_LE(b.corollary_lower, b.exact_lower + 1e-12);
        EXPECT_LE(b.exact_lower, b.exact_upper);
    }
    EXPECT_EQ(counted, g.vertex_count());
}

TEST(EstimateTheory, Consistent) {
    const EdgeListGraph g(testing::example_edges());
    const auto t = estimate_theory(g, 3, 1.6);
    EXPECT_NEAR(t.expected_rf_random, 2.0864, 1e-4);
    EXPECT_LE(t.expected_rf_dbh, t.expected_rf_random);
    EXPECT_EQ(t.curve_degrees, (std::vector<std::uint64_t>{2, 3, 4}));
    EXPECT_DOUBLE_EQ(t.b_zeta, b_zeta(1.6, 2, 4));
}

}  // namespace
}  // namespace edgecut
