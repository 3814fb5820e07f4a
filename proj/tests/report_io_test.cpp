#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgecut/error.hpp"
#include "edgecut/ingest.hpp"
#include "edgecut/report_io.hpp"
#include "support.hpp"

namespace edgecut {
namespace {

namespace fs = std::filesystem;

PartitionReport example_report() {
    const EdgeListGraph g(testing::example_edges());
    return full_report(g, PartitionAssignment(3, testing::example_assignment()));
}

TEST(ReportJson, RoundTrip) {
    const auto r = example_report();
    PartitionerSpec spec;
    spec.strategy = Strategy::DBHX;
    spec.num_parts = 3;
    spec.tau = kTauInfinity;
    spec.spread = 3;
    spec.hash = HashMode::Mixing;
    const auto j = report_to_json(r, spec, check_rf_msids_bound(r));
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
    EXPECT_EQ(j["partitioner"]["tau"], "inf");
    EXPECT_EQ(j["bound"]["holds"], true);
    const auto back = spec_from_json(j["partitioner"]);
    EXPECT_EQ(back.strategy, Strategy::DBHX);
    EXPECT_TRUE(std::isinf(back.tau));
    EXPECT_EQ(back.spread, 3u);
    EXPECT_EQ(back.hash, HashMode::Mixing);
}

TEST(ReportJson, FieldNames) {
    const auto j = report_to_json(example_report());
    for (const char* key : {"numParts", "balance", "replicationFactor", "repeatedVertices", "frontierVertices",
                            "communicationCost", "msids", "sumInnerDegSq", "partitionSizes"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_FALSE(j.contains("partitioner"));
}

TEST(ReportCsv, RowMatchesHeader) {
    PartitionerSpec spec;
    spec.strategy = Strategy::DBH;
    spec.num_parts = 3;
    const std::string header = report_csv_header();
    const std::string row = report_csv_row(example_report(), spec);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
    EXPECT_EQ(row.rfind("dbh,3,0,1,0,6,9,", 0), 0u);
    EXPECT_TRUE(row.ends_with(",6,4,10,14"));
}

TEST(Assignment, RoundTrip) {
    RmatParams p;
    p.scale = 8;
    const auto g = generate_rmat(p);
    PartitionerSpec spec;
    spec.strategy = Strategy::DBH;
    spec.num_parts = 17;
    const auto a = partition(g, spec);
    std::stringstream io;
    write_assignment(io, a);
    EXPECT_EQ(read_assignment(io), a);
}

TEST(Assignment, NumPartsResolution) {
    std::istringstream plain("0\n2\n1\n");
    EXPECT_EQ(read_assignment(plain).num_parts(), 3u);
    std::istringstream declared("# numParts=8\n0\n2\n");
    EXPECT_EQ(read_assignment(declared).num_parts(), 8u);
    std::istringstream forced("# numParts=8\n0\n2\n");
    EXPECT_EQ(read_assignment(forced, 5).num_parts(), 5u);
    std::istringstream too_small("0\n4\n");
    EXPECT_THROW(read_assignment(too_small, 3), ParameterError);
    std::istringstream junk("0\nx\n");
    EXPECT_THROW(read_assignment(junk), ParseError);
}

TEST(Trace, JsonLines) {
    SuperstepTrace t;
    t.step = 2;
    t.merge_ops = {3, 4};
    t.messages_in = {6, 8};
    t.active_vertices = 5;
    std::ostringstream out;
    write_trace_jsonl(out, {t, t});
    std::istringstream in(out.str());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["step"], 2);
        EXPECT_EQ(j["mergeOps"], (std::vector<int>{3, 4}));
        EXPECT_EQ(j["messagesIn"], (std::vector<int>{6, 8}));
        ++lines;
    }
    EXPECT_EQ(lines, 2);
}

TEST(BiTable, Columns) {
    const std::string csv = bi_table_csv({BiBucket{16, 31, 4, 0.25, 0.5, 0.6, 0.7}});
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "degreeBucketLow,degreeBucketHigh,count,empiricalB,corollaryLower,exactLower,exactUpper");
    EXPECT_NE(csv.find("16,31,4,0.25,0.5"), std::string::npos);
}

TEST(AtomicWrite, ReplacesTarget) {
    const fs::path dir = fs::temp_directory_path() / "edgecut_atomic_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.txt";
    write_file_atomically(target, [](std::ostream& o) { o << "first"; });
    write_file_atomically(target, [](std::ostream& o) { o << "second"; });
    std::ifstream in(target);
    std::string body;
    std::getline(in, body);
    EXPECT_EQ(body, "second");
    EXPECT_FALSE(fs::exists(dir / "out.txt.tmp"));
    fs::remove_all(dir);
}

}  // namespace
}  // namespace edgecut
