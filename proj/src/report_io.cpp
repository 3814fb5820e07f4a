#include "edgecut/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "edgecut/error.hpp"

namespace edgecut {
namespace {

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return out.str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

nlohmann::json spec_to_json(const PartitionerSpec& spec) {
    nlohmann::json j;
    j["strategy"] = std::string(to_string(spec.strategy));
    j["numParts"] = spec.num_parts;
    if (std::isinf(spec.tau)) {
        j["tau"] = "inf";
    } else {
        j["tau"] = spec.tau;
    }
    j["spread"] = spec.spread;
    j["seed"] = spec.seed;
    j["mixingHash"] = spec.hash == HashMode::Mixing;
    return j;
}

PartitionerSpec spec_from_json(const nlohmann::json& j) {
    PartitionerSpec spec;
    spec.strategy = parse_strategy(j.at("strategy").get<std::string>());
    spec.num_parts = j.at("numParts").get<PartId>();
    const auto& tau = j.at("tau");
    spec.tau = tau.is_string() ? kTauInfinity : tau.get<double>();
    spec.spread = j.at("spread").get<PartId>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.hash = j.value("mixingHash", false) ? HashMode::Mixing : HashMode::Identity;
    return spec;
}

nlohmann::json report_to_json(const PartitionReport& r, const std::optional<PartitionerSpec>& spec,
                              const std::optional<BoundCheck>& bound) {
    nlohmann::json j;
    j["numParts"] = r.num_parts;
    j["vertexCount"] = r.vertex_count;
    j["edgeCount"] = r.edge_count;
    j["balance"] = r.balance;
    j["replicationFactor"] = r.replication_factor;
    j["replicaTotal"] = r.replica_total;
    j["repeatedVertices"] = r.repeated_vertices;
    j["frontierVertices"] = r.frontier_vertices;
    j["communicationCost"] = r.communication_cost;
    j["msids"] = r.msids;
    j["sumInnerDegSq"] = r.sum_inner_deg_sq;
    j["partitionSizes"] = r.partition_sizes;
    if (spec) j["partitioner"] = spec_to_json(*spec);
    if (bound) j["bound"] = {{"lhs", bound->lhs}, {"rhs", bound->rhs}, {"holds", bound->holds}};
    return j;
}

PartitionReport report_from_json(const nlohmann::json& j) {
    PartitionReport r;
    r.num_parts = j.at("numParts").get<PartId>();
    r.vertex_count = j.at("vertexCount").get<std::uint64_t>();
    r.edge_count = j.at("edgeCount").get<std::uint64_t>();
    r.balance = j.at("balance").get<double>();
    r.replication_factor = j.at("replicationFactor").get<double>();
    r.replica_total = j.at("replicaTotal").get<std::uint64_t>();
    r.repeated_vertices = j.at("repeatedVertices").get<std::uint64_t>();
    r.frontier_vertices = j.at("frontierVertices").get<std::uint64_t>();
    r.communication_cost = j.at("communicationCost").get<std::uint64_t>();
    r.msids = j.at("msids").get<std::uint64_t>();
    r.sum_inner_deg_sq = j.at("sumInnerDegSq").get<std::vector<std::uint64_t>>();
    r.partition_sizes = j.at("partitionSizes").get<std::vector<std::uint64_t>>();
    return r;
}

std::string report_csv_header() {
    return "strategy,numParts,tau,spread,seed,vertexCount,edgeCount,balance,replicationFactor,"
           "repeatedVertices,frontierVertices,communicationCost,msids";
}

std::string report_csv_row(const PartitionReport& r, const PartitionerSpec& spec) {
    std::ostringstream out;
    out << to_string(spec.strategy) << ',' << r.num_parts << ',' << (std::isinf(spec.tau) ? "inf" : format_double(spec.tau))
        << ',' << spec.spread << ',' << spec.seed << ',' << r.vertex_count << ',' << r.edge_count << ','
        << format_double(r.balance) << ',' << format_double(r.replication_factor) << ',' << r.repeated_vertices << ','
        << r.frontier_vertices << ',' << r.communication_cost << ',' << r.msids;
    return out.str();
}

void write_assignment(std::ostream& out, const PartitionAssignment& a) {
    out << "# numParts=" << a.num_parts() << '\n';
    for (const PartId p : a.part_of()) out << p << '\n';
}

PartitionAssignment read_assignment(std::istream& in, std::optional<PartId> num_parts) {
    std::vector<PartId> ids;
    std::optional<PartId> declared;
    std::string line;
    std::size_t line_no = 0;
    PartId max_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '#') {
            constexpr std::string_view key = "numParts=";
            const std::string_view body = trim(s.substr(1));
            if (body.substr(0, key.size()) == key) {
                PartId m = 0;
                const auto v = body.substr(key.size());
                const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), m);
                if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError(line_no, "bad numParts comment");
                declared = m;
            }
            continue;
        }
        PartId p = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line_no, "expected a partition id");
        max_id = std::max(max_id, p);
        ids.push_back(p);
    }
    const PartId m = num_parts ? *num_parts : declared ? *declared : max_id + 1;
    return PartitionAssignment(m, std::move(ids));
}

PartitionAssignment read_assignment(const std::filesystem::path& path, std::optional<PartId> num_parts) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_assignment(in, num_parts);
}

nlohmann::json trace_to_json(const SuperstepTrace& t) {
    return {{"step", t.step},
            {"mergeOps", t.merge_ops},
            {"messagesIn", t.messages_in},
            {"activeVertices", t.active_vertices}};
}

void write_trace_jsonl(std::ostream& out, const std::vector<SuperstepTrace>& traces) {
    for (const SuperstepTrace& t : traces) out << trace_to_json(t).dump() << '\n';
}

std::string bi_table_csv(const std::vector<BiBucket>& table) {
    std::ostringstream out;
    out << "degreeBucketLow,degreeBucketHigh,count,empiricalB,corollaryLower,exactLower,exactUpper\n";
    for (const BiBucket& b : table) {
        out << b.low << ',' << b.high << ',' << b.count << ',' << format_double(b.empirical_b) << ','
            << format_double(b.corollary_lower) << ',' << format_double(b.exact_lower) << ','
            << format_double(b.exact_upper) << '\n';
    }
    return out.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        body(out);
        out.flush();
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace edgecut
