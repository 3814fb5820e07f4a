#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgecut/graph.hpp"
#include "edgecut/metrics.hpp"
#include "edgecut/partitioners.hpp"
#include "edgecut/theory.hpp"

namespace edgecut {

/// Process exit codes of the `edgecut` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParameter = 2,
    kExitInput = 3,
    kExitInvariant = 4,
};

struct SweepRanges {
    std::vector<PartId> num_parts;
    std::vector<double> taus;
    std::vector<PartId> spreads;
};

struct SweepRow {
    PartitionerSpec spec;
    PartitionReport report;
    BoundCheck bound;
    bool argmin_rf = false;
    bool argmin_msids = false;
};

/// One report per (numParts, tau, spread) combination, sorted by those keys.
/// The first row attaining the minimum RF (and MSIDS) is flagged. Throws
/// ParameterError when a range is empty.
std::vector<SweepRow> run_sweep(const EdgeListGraph& g, const PartitionerSpec& base, const SweepRanges& ranges);

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct CompareEntry {
    std::string label;
    PartitionReport report;
};

/// Aligned text table with balance, RF, MSIDS and the modeled max merge cost;
/// '*' marks each column minimum. When an Edge2D row is present (label starting
/// with "edge2d"), adds its merge-cost ratio over every row. Throws
/// ParameterError when the reports disagree on |E|.
std::string compare_table(const std::vector<CompareEntry>& entries);

/// Max over partitions of (sumInnerDegSq_j + 2|E_j|) / 2.
std::uint64_t max_model_merge_cost(const PartitionReport& r);

/// Entry point of the `edgecut` tool. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgecut
