#include "edgecut/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "edgecut/bsp.hpp"
#include "edgecut/error.hpp"
#include "edgecut/ingest.hpp"
#include "edgecut/report_io.hpp"

namespace edgecut {
namespace fs = std::filesystem;

namespace {

double parse_tau(const std::string& text) {
    if (text == "inf" || text == "infinity") return kTauInfinity;
    std::size_t used = 0;
    double tau = 0.0;
    try {
        tau = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParameterError("invalid tau '" + text + "'");
    }
    if (used != text.size() || std::isnan(tau) || tau < 0.0) throw ParameterError("invalid tau '" + text + "'");
    return tau;
}

std::string format_tau(double tau) {
    if (std::isinf(tau)) return "inf";
    std::ostringstream out;
    out << tau;
    return out.str();
}

std::string fixed(double x, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

std::string full(double x) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return out.str();
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create directory " + dir.string() + ": " + ec.message());
}

// Options shared by partition and sweep.
struct SpecOptions {
    std::string strategy = "dbh";
    PartId num_parts = 0;
    std::string tau;
    PartId spread = 1;
    std::uint64_t seed = 0;
    bool mixing = false;

    void attach(CLI::App& cmd, bool with_num_parts) {
        cmd.add_option("--strategy", strategy, "random | source-hash | edge2d | dbh | dbhx");
        if (with_num_parts) cmd.add_option("--num-parts", num_parts, "number of partitions");
        cmd.add_option("--tau", tau, "DBH-X degree threshold (number or 'inf')");
        cmd.add_option("--spread", spread, "DBH-X number of partition sets");
        cmd.add_option("--seed", seed, "seed for the random partitioner");
        cmd.add_flag("--mixing-hash", mixing, "scramble vertex ids before taking the modulus");
    }

    PartitionerSpec build() const {
        PartitionerSpec spec;
        spec.strategy = parse_strategy(strategy);
        spec.num_parts = num_parts;
        spec.spread = spread;
        spec.seed = seed;
        spec.hash = mixing ? HashMode::Mixing : HashMode::Identity;
        if (spec.strategy == Strategy::DBHX) {
            if (tau.empty()) throw ParameterError("dbhx requires --tau");
            spec.tau = parse_tau(tau);
        } else if (!tau.empty()) {
            spec.tau = parse_tau(tau);
        }
        return spec;
    }
};

int cmd_generate(const std::string& model, const RmatParams& rmat, const PowerLawParams& power, const fs::path& out_path,
                 std::ostream& out) {
    EdgeListGraph g = [&] {
        if (model == "rmat") return generate_rmat(rmat);
        if (model == "powerlaw") return generate_power_law(power);
        throw ParameterError("unknown model '" + model + "' (expected rmat or powerlaw)");
    }();
    write_file_atomically(out_path, [&](std::ostream& o) { write_edge_list(o, g); });
    out << "vertices\t" << g.vertex_count() << "\nedges\t" << g.edge_count() << '\n';
    return kExitOk;
}

int cmd_partition(const fs::path& input, const SpecOptions& opts, const std::string& injected, const fs::path& out_dir,
                  const std::string& format, std::ostream& out) {
    if (format != "json" && format != "csv") throw ParameterError("format must be json or csv");
    const EdgeListGraph g = read_edge_list(input);

    PartitionerSpec spec;
    std::optional<PartitionAssignment> assignment;
    if (!injected.empty()) {
        std::optional<PartId> m;
        if (opts.num_parts > 0) m = opts.num_parts;
        assignment = read_assignment(fs::path(injected), m);
        check_aligned(g, *assignment);
        spec = opts.build();
        spec.num_parts = assignment->num_parts();
    } else {
        spec = opts.build();
        assignment = partition(g, spec);
    }

    const PartitionReport report = full_report(g, *assignment);
    const BoundCheck bound = check_rf_msids_bound(report);

    ensure_directory(out_dir);
    write_file_atomically(out_dir / "assignment.txt", [&](std::ostream& o) { write_assignment(o, *assignment); });
    if (format == "json") {
        write_file_atomically(out_dir / "report.json",
                              [&](std::ostream& o) { o << report_to_json(report, spec, bound).dump(2) << '\n'; });
    } else {
        write_file_atomically(out_dir / "report.csv", [&](std::ostream& o) {
            o << report_csv_header() << ",boundLhs,boundRhs,boundHolds\n"
              << report_csv_row(report, spec) << ',' << full(bound.lhs) << ',' << full(bound.rhs) << ','
              << (bound.holds ? "true" : "false") << '\n';
        });
    }

    out << spec.describe() << '\n'
        << "balance\t" << fixed(report.balance, 4) << "\nRF\t" << fixed(report.replication_factor, 4) << "\nMSIDS\t"
        << report.msids << "\nrepeated\t" << report.repeated_vertices << "\nfrontier\t" << report.frontier_vertices
        << "\ncommunication\t" << report.communication_cost << "\nRF*MSIDS\t" << full(bound.lhs) << " >= "
        << full(bound.rhs) << '\n';
    return kExitOk;
}

int cmd_sweep(const fs::path& input, const SpecOptions& opts, const std::vector<PartId>& parts,
              const std::vector<std::string>& taus, const std::vector<PartId>& spreads, const fs::path& out_path,
              std::ostream& out) {
    const EdgeListGraph g = read_edge_list(input);
    SpecOptions base_opts = opts;
    if (base_opts.tau.empty()) base_opts.tau = "0";
    base_opts.num_parts = parts.empty() ? 1 : parts.front();
    const PartitionerSpec base = base_opts.build();

    SweepRanges ranges;
    ranges.num_parts = parts;
    for (const auto& t : taus) ranges.taus.push_back(parse_tau(t));
    ranges.spreads = spreads;
    if (ranges.taus.empty()) ranges.taus.push_back(base.tau);
    if (ranges.spreads.empty()) ranges.spreads.push_back(base.spread);

    const std::vector<SweepRow> rows = run_sweep(g, base, ranges);
    const std::string csv = sweep_csv(rows);
    write_file_atomically(out_path, [&](std::ostream& o) { o << csv; });
    out << csv;
    return kExitOk;
}

int cmd_simulate(const fs::path& input, const fs::path& assignment_path, const std::string& algo, std::size_t iters,
                 double tol, const fs::path& out_dir, std::ostream& out) {
    const EdgeListGraph g = read_edge_list(input);
    const PartitionAssignment a = read_assignment(assignment_path);
    check_aligned(g, a);
    const PartitionReport report = full_report(g, a);

    std::vector<SuperstepTrace> traces;
    ensure_directory(out_dir);
    bool converged = true;
    if (algo == "lpa") {
        auto result = run_lpa(g, a, iters);
        write_file_atomically(out_dir / "values.txt", [&](std::ostream& o) {
            for (std::size_t i = 0; i < result.values.size(); ++i) o << g.vertices()[i] << ' ' << result.values[i] << '\n';
        });
        traces = std::move(result.traces);
    } else if (algo == "pagerank") {
        auto result = run_pagerank(g, a, tol, iters);
        write_file_atomically(out_dir / "values.txt", [&](std::ostream& o) {
            for (std::size_t i = 0; i < result.values.size(); ++i) {
                o << g.vertices()[i] << ' ' << full(result.values[i]) << '\n';
            }
        });
        converged = result.converged;
        traces = std::move(result.traces);
    } else {
        throw ParameterError("unknown algorithm '" + algo + "' (expected lpa or pagerank)");
    }
    write_file_atomically(out_dir / "trace.jsonl", [&](std::ostream& o) { write_trace_jsonl(o, traces); });

    std::uint64_t max_ops = 0;
    for (const auto& t : traces) max_ops = std::max(max_ops, t.max_merge_ops());
    const auto model = merge_cost_model(a, g);
    out << "supersteps\t" << traces.size() << "\nconverged\t" << (converged ? "true" : "false")
        << "\nmaxPartitionMergeOps\t" << max_ops << "\nmaxModelMergeCost\t"
        << *std::max_element(model.begin(), model.end()) << "\nmsids\t" << report.msids << '\n';
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& paths, const std::string& out_path, std::ostream& out) {
    std::vector<CompareEntry> entries;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw Error("cannot open " + p);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(1, std::string("invalid report JSON in ") + p + ": " + e.what());
        }
        std::string label = fs::path(p).stem().string();
        if (j.contains("partitioner")) label = spec_from_json(j["partitioner"]).describe();
        entries.push_back({label, report_from_json(j)});
    }
    const std::string table = compare_table(entries);
    if (!out_path.empty()) write_file_atomically(out_path, [&](std::ostream& o) { o << table; });
    out << table;
    return kExitOk;
}

int cmd_theory(const fs::path& input, PartId m, double alpha, const std::string& out_path, std::ostream& out) {
    const EdgeListGraph g = read_edge_list(input);
    const TheoryEstimate t = estimate_theory(g, m, alpha);
    PartitionerSpec dbh;
    dbh.strategy = Strategy::DBH;
    dbh.num_parts = m;
    const auto table = validate_bi_empirically(g, dbh, alpha);
    const std::string csv = bi_table_csv(table);
    if (!out_path.empty()) write_file_atomically(out_path, [&](std::ostream& o) { o << csv; });
    out << "expectedRfRandom\t" << fixed(t.expected_rf_random, 4) << "\nexpectedRfDBH\t" << fixed(t.expected_rf_dbh, 4)
        << "\nbZeta\t" << full(t.b_zeta) << '\n';
    if (alpha > 1.0 && alpha < 2.0) out << "biThresholdDegree\t" << fixed(bi_threshold_degree(alpha, g.min_degree()), 3) << '\n';
    out << csv;
    return kExitOk;
}

}  // namespace

std::vector<SweepRow> run_sweep(const EdgeListGraph& g, const PartitionerSpec& base, const SweepRanges& ranges) {
    if (ranges.num_parts.empty() || ranges.taus.empty() || ranges.spreads.empty()) {
        throw ParameterError("sweep ranges must not be empty");
    }
    std::vector<SweepRow> rows;
    for (const PartId m : ranges.num_parts) {
        for (const double tau : ranges.taus) {
            for (const PartId spread : ranges.spreads) {
                PartitionerSpec spec = base;
                spec.num_parts = m;
                spec.tau = tau;
                spec.spread = spread;
                const PartitionAssignment a = partition(g, spec);
                SweepRow row{spec, full_report(g, a), {}};
                row.bound = check_rf_msids_bound(row.report);
                if (!row.bound.holds) throw InvariantViolation("RF * MSIDS bound violated in sweep");
                rows.push_back(std::move(row));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.spec.num_parts, x.spec.tau, x.spec.spread) < std::tie(y.spec.num_parts, y.spec.tau, y.spec.spread);
    });
    const auto rf_min = std::min_element(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return x.report.replication_factor < y.report.replication_factor;
    });
    const auto msids_min = std::min_element(rows.begin(), rows.end(),
                                            [](const SweepRow& x, const SweepRow& y) { return x.report.msids < y.report.msids; });
    rf_min->argmin_rf = true;
    msids_min->argmin_msids = true;
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "strategy,numParts,tau,spread,balance,replicationFactor,msids,boundLhs,boundRhs,boundHolds,argminRf,argminMsids\n";
    for (const SweepRow& r : rows) {
        out << to_string(r.spec.strategy) << ',' << r.spec.num_parts << ',' << format_tau(r.spec.tau) << ','
            << r.spec.spread << ',' << full(r.report.balance) << ',' << full(r.report.replication_factor) << ','
            << r.report.msids << ',' << full(r.bound.lhs) << ',' << full(r.bound.rhs) << ','
            << (r.bound.holds ? "true" : "false") << ',' << (r.argmin_rf ? 1 : 0) << ',' << (r.argmin_msids ? 1 : 0)
            << '\n';
    }
    return out.str();
}

std::uint64_t max_model_merge_cost(const PartitionReport& r) {
    std::uint64_t best = 0;
    for (std::size_t j = 0; j < r.sum_inner_deg_sq.size(); ++j) {
        best = std::max(best, (r.sum_inner_deg_sq[j] + 2 * r.partition_sizes[j]) / 2);
    }
    return best;
}

std::string compare_table(const std::vector<CompareEntry>& entries) {
    if (entries.empty()) throw ParameterError("nothing to compare");
    for (const auto& e : entries) {
        if (e.report.edge_count != entries.front().report.edge_count) {
            throw ParameterError("reports come from different graphs (|E| differs)");
        }
    }

    const CompareEntry* baseline = nullptr;
    for (const auto& e : entries) {
        if (e.label.rfind("edge2d", 0) == 0) {
            baseline = &e;
            break;
        }
    }

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {"partition algorithm", "balance", "RF", "MSIDS", "max merge cost"};
    if (baseline) header.push_back("merge-cost improv. vs edge2d (simulated)");

    double min_balance = std::numeric_limits<double>::infinity();
    double min_rf = min_balance;
    std::uint64_t min_msids = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t min_cost = min_msids;
    for (const auto& e : entries) {
        min_balance = std::min(min_balance, e.report.balance);
        min_rf = std::min(min_rf, e.report.replication_factor);
        min_msids = std::min(min_msids, e.report.msids);
        min_cost = std::min(min_cost, max_model_merge_cost(e.report));
    }
    const auto mark = [](bool best, std::string s) { return best ? "*" + s : s; };
    for (const auto& e : entries) {
        const std::uint64_t cost = max_model_merge_cost(e.report);
        std::vector<std::string> row = {e.label, mark(e.report.balance == min_balance, fixed(e.report.balance, 4)),
                                        mark(e.report.replication_factor == min_rf, fixed(e.report.replication_factor, 4)),
                                        mark(e.report.msids == min_msids, std::to_string(e.report.msids)),
                                        mark(cost == min_cost, std::to_string(cost))};
        if (baseline) {
            const double ratio = static_cast<double>(max_model_merge_cost(baseline->report)) / static_cast<double>(cost);
            row.push_back(fixed(ratio, 2) + "x");
        }
        cells.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? " | " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    };
    emit(header);
    std::size_t total = 0;
    for (const auto w : width) total += w;
    out << std::string(total + 3 * (width.size() - 1), '-') << '\n';
    for (const auto& row : cells) emit(row);
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex-cut edge partitioning toolkit"};
    app.require_subcommand(1);

    std::string model = "rmat";
    RmatParams rmat;
    PowerLawParams power;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "write a synthetic edge list");
    generate->add_option("--model", model, "rmat | powerlaw");
    generate->add_option("--scale", rmat.scale, "rmat: log2 of the vertex count");
    generate->add_option("--edge-factor", rmat.edge_factor, "rmat: edges per vertex");
    generate->add_option("--a", rmat.a);
    generate->add_option("--b", rmat.b);
    generate->add_option("--c", rmat.c);
    generate->add_option("--d", rmat.d);
    generate->add_option("--n", power.n, "powerlaw: vertex count");
    generate->add_option("--alpha", power.alpha, "powerlaw: exponent");
    generate->add_option("--d-min", power.d_min, "powerlaw: minimum degree");
    std::uint64_t gen_seed = 1;
    generate->add_option("--seed", gen_seed);
    generate->add_option("--out", gen_out)->required();

    std::string input;
    std::string out_dir;
    std::string format = "json";
    std::string injected;
    SpecOptions part_opts;
    auto* part = app.add_subcommand("partition", "partition an edge list and report metrics");
    part->add_option("--input", input)->required();
    part_opts.attach(*part, true);
    part->add_option("--assignment", injected, "measure this assignment file instead of partitioning");
    part->add_option("--out", out_dir, "output directory")->required();
    part->add_option("--format", format, "json | csv");

    SpecOptions sweep_opts;
    std::vector<PartId> sweep_parts;
    std::vector<std::string> sweep_taus;
    std::vector<PartId> sweep_spreads;
    std::string sweep_input;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "report metrics over a parameter grid");
    sweep->add_option("--input", sweep_input)->required();
    sweep_opts.attach(*sweep, false);
    sweep->add_option("--num-parts", sweep_parts, "partition counts")->required()->delimiter(',');
    sweep->add_option("--taus", sweep_taus, "tau values")->delimiter(',');
    sweep->add_option("--spreads", sweep_spreads, "spread values")->delimiter(',');
    sweep->add_option("--out", sweep_out, "CSV output path")->required();

    std::string sim_input;
    std::string sim_assignment;
    std::string algo = "lpa";
    std::size_t iters = 10;
    double tol = 1e-8;
    std::string sim_out;
    auto* simulate = app.add_subcommand("simulate", "run LPA or PageRank on the BSP simulator");
    simulate->add_option("--input", sim_input)->required();
    simulate->add_option("--assignment", sim_assignment)->required();
    simulate->add_option("--algo", algo, "lpa | pagerank");
    simulate->add_option("--iters", iters, "LPA iterations, or PageRank iteration cap");
    simulate->add_option("--tol", tol, "PageRank L1 tolerance");
    simulate->add_option("--out", sim_out, "output directory")->required();

    std::vector<std::string> report_paths;
    std::string compare_out;
    auto* compare = app.add_subcommand("compare", "tabulate reports of one graph side by side");
    compare->add_option("reports", report_paths, "report JSON files")->required();
    compare->add_option("--out", compare_out);

    std::string theory_input;
    PartId theory_parts = 1;
    double theory_alpha = 1.6;
    std::string theory_out;
    auto* theory = app.add_subcommand("theory", "expected-RF estimates and the DBH b_i validator table");
    theory->add_option("--input", theory_input)->required();
    theory->add_option("--num-parts", theory_parts);
    theory->add_option("--alpha", theory_alpha);
    theory->add_option("--out", theory_out, "CSV output path for the validator table");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (*generate) {
            rmat.seed = gen_seed;
            power.seed = gen_seed;
            return cmd_generate(model, rmat, power, gen_out, out);
        }
        if (*part) return cmd_partition(input, part_opts, injected, out_dir, format, out);
        if (*sweep) return cmd_sweep(sweep_input, sweep_opts, sweep_parts, sweep_taus, sweep_spreads, sweep_out, out);
        if (*simulate) return cmd_simulate(sim_input, sim_assignment, algo, iters, tol, sim_out, out);
        if (*compare) return cmd_compare(report_paths, compare_out, out);
        if (*theory) return cmd_theory(theory_input, theory_parts, theory_alpha, theory_out, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed report: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitParameter;
}

}  // namespace edgecut
