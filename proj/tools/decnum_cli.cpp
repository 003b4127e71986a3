// decnum command-line front end: solve single graphs, reproduce the decision
// number tables over whole graph classes, run the verification suite, and
// emit the extremal constructions.
//
// Exit codes: 0 success, 1 verification violation, 2 input/parse error,
// 3 infeasible instance.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decnum/classes.hpp"
#include "decnum/constructions.hpp"
#include "decnum/formulas.hpp"
#include "decnum/graph6.hpp"
#include "decnum/named.hpp"
#include "decnum/solver.hpp"
#include "decnum/table.hpp"
#include "decnum/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("cannot parse order range '" + s + "' (expected a or a..b)");
    }
}

decnum::GraphClassSpec parse_class(const std::string& s) {
    auto spec = decnum::GraphClassSpec::parse(s);
    if (!spec) throw InputError("unknown class '" + s + "' (expected trees, cubic, or g6:<path>)");
    return *spec;
}

decnum::Variant parse_variant(const std::string& s) {
    auto v = decnum::Variant::parse(s);
    if (!v) throw InputError("unknown variant '" + s + "'");
    return *v;
}

int default_workers() {
    if (const char* env = std::getenv("DECNUM_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

std::vector<decnum::Graph> gather_inputs(const std::string& input) {
    std::vector<decnum::Graph> graphs;
    auto sink = [&](const decnum::Graph& g) { graphs.push_back(g); };
    if (input == "-")
        decnum::for_each_graph6(std::cin, sink);
    else if (std::filesystem::exists(input))
        decnum::read_graph6_file(input, sink);
    else
        graphs.push_back(decnum::parse_graph6(input));
    return graphs;
}

int cmd_solve(const std::string& input, const std::string& variant_s) {
    auto variant = parse_variant(variant_s);
    auto graphs = gather_inputs(input);
    bool any_infeasible = false;
    for (const auto& g : graphs) {
        auto out = decnum::solve(g, variant);
        if (out.optimal()) {
            std::cout << "optimal value=" << out.value
                      << " witness=" << decnum::assignment_to_string(out.witness)
                      << " nodes=" << out.nodes_explored << '\n';
        } else {
            std::cout << "infeasible nodes=" << out.nodes_explored << '\n';
            any_infeasible = true;
        }
    }
    return any_infeasible ? kExitInfeasible : kExitOk;
}

int cmd_table(const std::string& class_s, const std::string& variant_s,
              const std::string& range_s, int workers, const std::string& format_s,
              const std::string& checkpoint, const std::string& witnesses,
              const std::string& out_path) {
    auto fmt = decnum::parse_table_format(format_s);
    if (!fmt) throw InputError("unknown format '" + format_s + "'");
    decnum::RunConfig cfg;
    cfg.cls = parse_class(class_s);
    cfg.variant = parse_variant(variant_s);
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(range_s);
    cfg.workers = workers;
    cfg.format = *fmt;
    cfg.checkpoint_path = checkpoint;
    cfg.witness_path = witnesses;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw InputError("cannot open output file " + out_path);
        out = &file;
    }

    if (cfg.format == decnum::TableFormat::Json) {
        auto rows = decnum::run_table(cfg);
        *out << decnum::format_rows(rows, cfg.format);
    } else {
        bool header = false;
        decnum::run_table(cfg, [&](const decnum::TableRow& row) {
            std::string block = decnum::format_rows({row}, cfg.format);
            std::istringstream lines(block);
            std::string line;
            int lineno = 0;
            while (std::getline(lines, line)) {
                bool is_header = (cfg.format == decnum::TableFormat::Csv && lineno == 0) ||
                                 (cfg.format == decnum::TableFormat::Markdown && lineno <= 1);
                if (!is_header || !header) *out << line << '\n';
                ++lineno;
            }
            header = true;
            out->flush();
        });
    }
    return kExitOk;
}

int cmd_verify(const std::string& class_s, const std::string& range_s, int corrupt) {
    decnum::VerifyConfig cfg;
    cfg.cls = parse_class(class_s);
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(range_s);
    cfg.corrupt_delta = corrupt;
    auto report = decnum::run_verify(cfg);
    report.print(std::cout);
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_enumerate(const std::string& class_s, const std::string& range_s,
                  const std::string& out_path) {
    auto cls = parse_class(class_s);
    auto [lo, hi] = parse_range(range_s);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw InputError("cannot open output file " + out_path);
        out = &file;
    }
    for (int n = lo; n <= hi; ++n)
        decnum::for_each_in_class(cls, n, [&](const decnum::Graph& g) {
            *out << decnum::emit_graph6(g) << '\n';
        });
    return kExitOk;
}

decnum::Graph parse_skeleton(const std::string& s) {
    if (s.rfind("path", 0) == 0) return decnum::path_graph(std::stoi(s.substr(4)));
    if (s.rfind("star", 0) == 0) return decnum::star_graph(std::stoi(s.substr(4)));
    if (s.rfind("g6:", 0) == 0) return decnum::parse_graph6(s.substr(3));
    throw InputError("unknown skeleton '" + s + "' (expected pathK, starK, or g6:<line>)");
}

nlohmann::json sidecar_json(const std::string& family, const decnum::CertifiedAssignment& ca) {
    auto ev = ca.check();
    return {{"family", family},
            {"order", ca.graph.order()},
            {"graph6", decnum::emit_graph6(ca.graph)},
            {"assignment",
             {{"variant", std::string(ca.variant.name())},
              {"values", decnum::assignment_to_string(ca.assignment)},
              {"total", ev.total},
              {"claimed_bound", ca.claimed_bound},
              {"direction", ca.variant.minimize ? "<=" : ">="},
              {"valid", ev.valid}}}};
}

int cmd_construct(const std::string& family, int param, const std::string& skeleton_s,
                  const std::string& out_path, const std::string& sidecar_path) {
    std::optional<decnum::Graph> graph;
    std::optional<decnum::CertifiedAssignment> cert;

    if (family == "heawood") {
        cert = decnum::greedy_good_cubic_bipartite(decnum::heawood());
    } else if (family == "heawood-tower") {
        if (param < 1) throw InputError("heawood-tower needs a level >= 1");
        cert = decnum::heawood_tower_good(param);
    } else if (family == "k23-chain") {
        if (param < 1) throw InputError("k23-chain needs t >= 1");
        graph = decnum::k23_chain(param);
    } else if (family == "extremal-bad-tree") {
        if (skeleton_s.empty()) throw InputError("extremal-bad-tree needs --skeleton");
        cert = decnum::extremal_bad_tree(parse_skeleton(skeleton_s));
    } else if (family == "petersen") {
        graph = decnum::petersen();
    } else {
        throw InputError("unknown family '" + family +
                         "' (heawood, heawood-tower, k23-chain, extremal-bad-tree, petersen)");
    }

    const decnum::Graph& g = cert ? cert->graph : *graph;
    std::string g6 = decnum::emit_graph6(g);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::trunc);
        f << g6 << '\n';
    } else {
        std::cout << g6 << '\n';
    }
    if (cert) {
        auto j = sidecar_json(family, *cert);
        if (!sidecar_path.empty()) {
            std::ofstream f(sidecar_path, std::ios::trunc);
            f << j.dump(2) << '\n';
        } else {
            std::cout << j.dump() << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers, class tables, and verified constructions for the four +-1 "
                 "decision numbers (bad/nice/good/excellent) of graphs"};
    app.require_subcommand(1);

    std::string variant_s = "bad", class_s = "trees", range_s, input, format_s = "csv";
    std::string checkpoint, witnesses, out_path, sidecar_path, skeleton_s, family;
    int workers = default_workers();
    int param = 0;
    bool corrupt = false;

    auto* sc_solve = app.add_subcommand("solve", "solve one graph6 line, a file, or - (stdin)");
    sc_solve->add_option("input", input, "graph6 line, file path, or -")->required();
    sc_solve->add_option("--variant", variant_s, "bad|nice|good|excellent");

    auto* sc_table = app.add_subcommand("table", "min/m/max/M table over a graph class");
    sc_table->add_option("--class", class_s, "trees|cubic|g6:<path>");
    sc_table->add_option("--variant", variant_s, "bad|nice|good|excellent");
    sc_table->add_option("--n", range_s, "order or range a..b")->required();
    sc_table->add_option("--workers", workers, "solver threads (env DECNUM_WORKERS)");
    sc_table->add_option("--format", format_s, "csv|json|markdown");
    sc_table->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
    sc_table->add_option("--witnesses", witnesses, "dump per-graph witnesses (JSON lines)");
    sc_table->add_option("--out", out_path, "write the table here instead of stdout");

    auto* sc_verify = app.add_subcommand("verify", "run the bound and construction verification suite");
    sc_verify->add_option("--class", class_s, "trees|cubic|g6:<path>");
    sc_verify->add_option("--n", range_s, "order or range a..b")->required();
    sc_verify->add_flag("--corrupt-solver", corrupt,
                        "test hook: offset solver results by +2 to prove violations are caught");

    auto* sc_enum = app.add_subcommand("enumerate", "dump a graph class as graph6 lines");
    sc_enum->add_option("--class", class_s, "trees|cubic|g6:<path>");
    sc_enum->add_option("--n", range_s, "order or range a..b")->required();
    sc_enum->add_option("--out", out_path, "write graph6 lines here instead of stdout");

    auto* sc_con = app.add_subcommand("construct", "emit a named extremal family member");
    sc_con->add_option("family", family,
                       "heawood | heawood-tower | k23-chain | extremal-bad-tree | petersen")
        ->required();
    sc_con->add_option("param", param, "tower level / chain length");
    sc_con->add_option("--skeleton", skeleton_s, "pathK, starK, or g6:<line>");
    sc_con->add_option("--out", out_path, "write graph6 here instead of stdout");
    sc_con->add_option("--sidecar", sidecar_path, "write the assignment sidecar JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (sc_solve->parsed()) return cmd_solve(input, variant_s);
        if (sc_table->parsed())
            return cmd_table(class_s, variant_s, range_s, workers, format_s, checkpoint,
                             witnesses, out_path);
        if (sc_verify->parsed()) return cmd_verify(class_s, range_s, corrupt ? 2 : 0);
        if (sc_enum->parsed()) return cmd_enumerate(class_s, range_s, out_path);
        if (sc_con->parsed())
            return cmd_construct(family, param, skeleton_s, out_path, sidecar_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
