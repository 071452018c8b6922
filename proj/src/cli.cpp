#include "netctrl/cli.hpp"

#include "netctrl/control.hpp"
#include "netctrl/serialize.hpp"
#include "netctrl/verify.hpp"
#include "netctrl/zero_forcing.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace netctrl::cli {

namespace {

struct OrderCaps {
    std::size_t lie = kDefaultLieOrderCap;
    std::size_t zfs = kDefaultZfsOrderCap;
};

OrderCaps order_caps(std::ostream& err) {
    OrderCaps caps;
    const char* raw = std::getenv("NETCTRL_MAX_ORDER");
    if (!raw || !*raw) return caps;
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(raw, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || raw[pos] != '\0' || value == 0) throw InputError("NETCTRL_MAX_ORDER must be a positive integer");
    if (value > kDefaultLieOrderCap) {
        err << "warning: NETCTRL_MAX_ORDER=" << value << " exceeds the default cap " << kDefaultLieOrderCap
            << "; exact arithmetic may be slow\n";
    }
    caps.lie = caps.zfs = value;
    return caps;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

void write_dot(const Graph& g, const std::string& path) {
    if (path.empty()) return;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << to_dot(g);
}

void print_chronicle(const ForceChronicle& chronicle, std::ostream& out) {
    for (const Force& f : chronicle) out << f.forcer << " -> " << f.forced << "\n";
}

struct ZfsArgs {
    std::string graph;
    std::string set;
    bool minimum = false;
    std::string expect;
    std::string dot;
};

int run_zfs(const ZfsArgs& args, std::ostream& out, std::ostream& err) {
    const auto caps = order_caps(err);
    const Graph g = read_graph_file(args.graph);
    write_dot(g, args.dot);
    if (args.minimum == !args.set.empty()) throw InputError("zfs: give exactly one of --set or --minimum");

    bool forcing = true;
    if (args.minimum) {
        const auto best = min_zfs(g, caps.zfs);
        const auto result = closure(g, best.witness);
        out << "zero forcing number: " << best.number << "\n";
        out << "witness: " << best.witness.to_string() << "\n";
        print_chronicle(result.chronicle, out);
    } else {
        const VertexSet s = VertexSet::parse(g.order(), args.set);
        const auto result = closure(g, s);
        forcing = result.black.size() == g.order();
        out << (forcing ? "zero forcing set" : "NOT a zero forcing set") << "; closure = " << result.black.to_string()
            << "\n";
        print_chronicle(result.chronicle, out);
    }

    if (args.expect.empty()) return kOk;
    if (args.expect == "zfs") return forcing ? kOk : kExpectationUnmet;
    if (args.expect == "not-zfs") return forcing ? kExpectationUnmet : kOk;
    throw InputError("zfs: --expect must be zfs or not-zfs");
}

struct AnalyzeArgs {
    std::string graph;
    std::string matrix_file;
    std::string set;
    std::string matrix = "adjacency";
    std::string report = "text";
    std::string expect;
    std::string out;
    std::string dot;
};

int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    const auto caps = order_caps(err);
    if (args.graph.empty() == args.matrix_file.empty()) {
        throw InputError("analyze: give exactly one of --graph or --matrix-file");
    }
    const PatternMatrix a = args.matrix_file.empty()
                                ? build_matrix(read_graph_file(args.graph), MatrixKind::parse(args.matrix))
                                : PatternMatrix(read_matrix_file(args.matrix_file));
    write_dot(a.pattern(), args.dot);
    const VertexSet s = VertexSet::parse(a.order(), args.set);
    const auto report = analyze(a, s, caps.lie);

    if (args.report == "json") {
        write_output(report_to_json(report).dump(2) + "\n", args.out, out);
    } else if (args.report == "text") {
        write_output(report_to_text(report), args.out, out);
    } else {
        throw InputError("analyze: --report must be text or json");
    }

    if (report.theorem_violation()) {
        err << "THEOREM-VIOLATION: a consistency check failed\n";
        return kTheoremViolation;
    }
    if (args.expect.empty()) return kOk;
    if (args.expect == "controllable") return report.lie_controllable ? kOk : kExpectationUnmet;
    if (args.expect == "not-controllable") return report.lie_controllable ? kExpectationUnmet : kOk;
    if (args.expect == "zfs") return report.zfs_status ? kOk : kExpectationUnmet;
    if (args.expect == "not-zfs") return report.zfs_status ? kExpectationUnmet : kOk;
    throw InputError("analyze: --expect must be controllable, not-controllable, zfs or not-zfs");
}

struct VerifyArgs {
    std::size_t max_order = 4;
    std::string kinds = "adjacency";
    std::string subsets = "all";
    std::uint64_t seed = 0;
    std::string sweep = "both";
    std::string out;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const auto caps = order_caps(err);
    SweepConfig cfg;
    cfg.max_order = args.max_order;
    cfg.matrix_kinds.clear();
    for (const auto& k : split_commas(args.kinds)) cfg.matrix_kinds.push_back(MatrixKind::parse(k));
    cfg.subset_policy = SubsetPolicy::parse(args.subsets);
    cfg.seed = args.seed;
    cfg.order_cap = caps.lie;
    cfg.validate();

    Json doc = Json::object();
    bool passed = true;
    auto summarize = [&](const char* name, const SweepOutcome& o) {
        out << name << ": " << o.instances_checked << " instances, " << o.violations.size() << " violations, "
            << o.hypothesis_not_met << " hypothesis not met -> " << (o.passed ? "PASS" : "FAIL") << "\n";
        for (const auto& v : o.violations) {
            out << "  violation " << v.check << " kind " << v.kind << " subset "
                << VertexSet(v.graph.empty() ? v.subset.size() : parse_graph(v.graph).order(), v.subset).to_string()
                << ": " << v.detail << "\n";
        }
        doc[name] = outcome_to_json(o);
        passed = passed && o.passed;
    };
    if (args.sweep == "equivalence" || args.sweep == "both") summarize("equivalence", sweep_equivalence(cfg));
    if (args.sweep == "zfs" || args.sweep == "both") summarize("zfs_implication", sweep_zfs_implication(cfg));
    if (doc.empty()) throw InputError("verify: --sweep must be equivalence, zfs or both");

    if (!args.out.empty()) write_output(doc.dump(2) + "\n", args.out, out);
    return passed ? kOk : kTheoremViolation;
}

int run_examples(std::ostream& out) {
    bool all = true;
    for (const auto& row : reference_examples()) {
        out << "(" << row.id << ") " << row.description << "\n"
            << "    expected: " << row.expected << "\n"
            << "    computed: " << row.computed << "\n"
            << "    match:    " << (row.match ? "yes" : "NO") << "\n";
        all = all && row.match;
    }
    return all ? kOk : kTheoremViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero forcing, Kalman and Lie-algebraic controllability on graphs", "netctrl"};
    app.require_subcommand(1);

    ZfsArgs zfs;
    auto* zfs_cmd = app.add_subcommand("zfs", "Zero forcing closure or exact zero forcing number");
    zfs_cmd->add_option("--graph", zfs.graph, "Edge-list file")->required();
    auto* set_opt = zfs_cmd->add_option("--set", zfs.set, "Initial black set, e.g. 1,3,5");
    auto* min_opt = zfs_cmd->add_flag("--minimum", zfs.minimum, "Compute the zero forcing number");
    set_opt->excludes(min_opt);
    zfs_cmd->add_option("--expect", zfs.expect, "zfs | not-zfs");
    zfs_cmd->add_option("--dot", zfs.dot, "Also write the graph as DOT");

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Kalman, Lie and zero forcing verdicts for one control set");
    analyze_cmd->add_option("--graph", an.graph, "Edge-list file");
    analyze_cmd->add_option("--matrix-file", an.matrix_file, "Explicit symmetric matrix file");
    analyze_cmd->add_option("--set", an.set, "Control vertices, e.g. 1,3")->required();
    analyze_cmd->add_option("--matrix", an.matrix, "adjacency | laplacian | random:SEED");
    analyze_cmd->add_option("--report", an.report, "text | json");
    analyze_cmd->add_option("--expect", an.expect, "controllable | not-controllable | zfs | not-zfs");
    analyze_cmd->add_option("--out", an.out, "Write the report to a file");
    analyze_cmd->add_option("--dot", an.dot, "Also write the graph of the matrix as DOT");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep instances and check the controllability theorems");
    verify_cmd->add_option("--max-order", ver.max_order, "Largest graph order");
    verify_cmd->add_option("--kinds", ver.kinds, "Comma list of adjacency, laplacian, random:SEED");
    verify_cmd->add_option("--subsets", ver.subsets, "all | singletons | zfs | random:K:SEED");
    verify_cmd->add_option("--seed", ver.seed, "Seed for sampled graphs of order 6 and up");
    verify_cmd->add_option("--sweep", ver.sweep, "equivalence | zfs | both");
    verify_cmd->add_option("--out", ver.out, "Write the sweep outcome JSON");

    auto* examples_cmd = app.add_subcommand("examples", "Recompute the reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (zfs_cmd->parsed()) return run_zfs(zfs, out, err);
        if (analyze_cmd->parsed()) return run_analyze(an, out, err);
        if (verify_cmd->parsed()) return run_verify(ver, out, err);
        if (examples_cmd->parsed()) return run_examples(out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace netctrl::cli
