#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgecut/bsp.hpp"
#include "edgecut/metrics.hpp"
#include "edgecut/partitioners.hpp"
#include "edgecut/theory.hpp"

namespace edgecut {

/// Report JSON uses camelCase field names. `partitioner` and `bound` are
/// included when given.
nlohmann::json report_to_json(const PartitionReport& r, const std::optional<PartitionerSpec>& spec = std::nullopt,
                              const std::optional<BoundCheck>& bound = std::nullopt);
PartitionReport report_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const PartitionerSpec& spec);
PartitionerSpec spec_from_json(const nlohmann::json& j);

/// Scalar columns only; per-partition arrays are JSON-only.
std::string report_csv_header();
std::string report_csv_row(const PartitionReport& r, const PartitionerSpec& spec);

/// One partition id per line, preceded by a "# numParts=<m>" comment.
void write_assignment(std::ostream& out, const PartitionAssignment& a);

/// Accepts '#' comments. The partition count comes from `num_parts`, else
/// from the numParts comment, else max id + 1. Throws ParseError.
PartitionAssignment read_assignment(std::istream& in, std::optional<PartId> num_parts = std::nullopt);
PartitionAssignment read_assignment(const std::filesystem::path& path,
                                    std::optional<PartId> num_parts = std::nullopt);

/// {"step", "mergeOps", "messagesIn", "activeVertices"}, one object per line.
nlohmann::json trace_to_json(const SuperstepTrace& t);
void write_trace_jsonl(std::ostream& out, const std::vector<SuperstepTrace>& traces);

std::string bi_table_csv(const std::vector<BiBucket>& table);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace edgecut
