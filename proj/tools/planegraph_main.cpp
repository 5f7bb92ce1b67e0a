// planegraph: generate, analyze, extract, cycle-check, and verify plane
// graphs given as rotation systems.
//
// Exit codes: 0 success, 2 usage error, 3 extraction hypothesis not met,
// 4 verification/certification failure, 5 budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planegraph/bounds.hpp"
#include "planegraph/connectivity.hpp"
#include "planegraph/cycles.hpp"
#include "planegraph/extract.hpp"
#include "planegraph/generators.hpp"
#include "planegraph/holes.hpp"
#include "planegraph/io.hpp"
#include "planegraph/verify.hpp"

using namespace planegraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesisNotMet = 3;
constexpr int kExitVerificationFailure = 4;
constexpr int kExitBudget = 5;

struct Common {
    std::string input = "-";
    std::string out;
    std::string format = "auto";  // auto | planar_code | text
    std::uint64_t seed = 1;
    std::int64_t budget_ms = 0;
    int workers = 1;
};

std::string run_config_line(const std::string& subcommand, const std::vector<std::string>& params) {
    std::string line = "run: planegraph " + subcommand;
    for (const auto& p : params) line += " " + p;
    return line;
}

std::vector<PlaneGraph> read_graphs(const Common& c) {
    std::string bytes;
    if (c.input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        bytes = buf.str();
    } else {
        std::ifstream in(c.input, std::ios::binary);
        if (!in) fail(Errc::FormatError, "cannot open input " + c.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        bytes = buf.str();
    }
    std::istringstream is(bytes);
    if (c.format == "planar_code") return read_planar_code(is);
    if (c.format == "text") return read_text(is);
    // sniff: planar_code header, or a leading byte below ' ' means binary
    if (!bytes.empty() && (bytes[0] == '>' || static_cast<unsigned char>(bytes[0]) < ' '))
        return read_planar_code(is);
    return read_text(is);
}

void write_graphs(const Common& c, const std::vector<PlaneGraph>& graphs,
                  const std::vector<std::string>& comments, const std::string& config) {
    bool planar = c.format == "planar_code";
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out, std::ios::binary);
        if (!file) fail(Errc::FormatError, "cannot open output " + c.out);
        os = &file;
    }
    if (planar) {
        // binary stream: the run config and spec lines go to stderr
        std::cerr << "# " << config << "\n";
        for (const auto& cm : comments) std::cerr << "# " << cm << "\n";
        bool first = true;
        for (const auto& g : graphs) {
            write_planar_code(*os, g, first);
            first = false;
        }
    } else {
        *os << "# " << config << "\n";
        for (size_t i = 0; i < graphs.size(); ++i)
            write_text(*os, graphs[i], i < comments.size() ? comments[i] : std::string());
    }
}

void analyze_one(std::ostream& os, const PlaneGraph& g, int index) {
    os << "graph " << index << ": n=" << g.vertex_count << " e=" << g.edge_count
       << " f=" << g.faces.size() << "\n";
    std::map<int, int> histogram;
    for (const auto& f : g.faces) ++histogram[f.length()];
    os << "  face lengths:";
    for (auto [len, count] : histogram) os << " " << len << "x" << count;
    os << "\n  outer face:";
    for (VertexId v : g.outer_face().walk_vertices()) os << " " << v;
    os << "\n";
    bool two_conn = is_two_connected(g);
    os << "  two-connected: " << (two_conn ? "yes" : "no") << "\n";
    if (!two_conn) {
        os << "  m(G): n/a (needs 2-connectivity)\n";
        os << "  near-triangulation: no (not 2-connected)\n";
        os << "  circuit-graph: no (not 2-connected)\n";
        return;
    }
    os << "  m(G): " << missing_edge_count(g) << "\n";
    os << "  near-triangulation: " << (is_near_triangulation(g) ? "yes" : "no") << "\n";
    os << "  circuit-graph: " << (is_circuit_graph(g) ? "yes" : "no") << "\n";
    auto hs = holes(g);
    os << "  holes: " << hs.size() << "\n";
    for (const auto& h : hs) {
        os << "    hole len=" << h.length() << ":";
        for (VertexId v : h.walk_vertices()) os << " " << v;
        os << "\n";
    }
}

int run_verify_suite(const std::string& which, const SuiteOptions& opt, std::ostream& os,
                     bool records) {
    std::vector<VerificationReport> reports;
    if (which == "embedding") reports.push_back(verify_embedding_suite(opt));
    else if (which == "missing-edges") reports.push_back(verify_missing_edge_suite(opt));
    else if (which == "extraction") reports.push_back(verify_extraction_suite(opt, 4, 8, std::max(1, opt.trials / 5), 64));
    else if (which == "properties") reports.push_back(verify_property_suite(opt));
    else if (which == "glued") reports.push_back(verify_glued_suite(opt, {7, 14}, 40));
    else if (which == "bounds") reports.push_back(verify_bound_formula_suite(opt));
    else if (which == "short-circumference") reports.push_back(verify_short_circumference_suite(opt));
    else if (which == "all") {
        reports.push_back(verify_embedding_suite(opt));
        reports.push_back(verify_missing_edge_suite(opt));
        reports.push_back(verify_extraction_suite(opt, 4, 8, std::max(1, opt.trials / 5), 64));
        reports.push_back(verify_property_suite(opt));
        reports.push_back(verify_glued_suite(opt, {7, 14}, 40));
        reports.push_back(verify_bound_formula_suite(opt));
    } else {
        std::cerr << "unknown suite: " << which << "\n";
        return kExitUsage;
    }
    bool all_ok = true;
    bool any_budget = false;
    for (const auto& r : reports) {
        if (records) r.print_records(os);
        r.print_summary(os);
        all_ok = all_ok && r.all_passed();
        any_budget = any_budget || r.count(CheckStatus::Budget) > 0;
    }
    if (!all_ok) return any_budget ? kExitBudget : kExitVerificationFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph analysis toolkit"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App* cmd, bool with_io = true) {
        if (with_io) {
            cmd->add_option("input", common.input, "input path, - for stdin");
            cmd->add_option("--out", common.out, "output path (default stdout)");
        }
        cmd->add_option("--format", common.format, "planar_code | text | auto")
            ->check(CLI::IsMember({"planar_code", "text", "auto"}));
        cmd->add_option("--seed", common.seed, "seed for randomized behavior");
        cmd->add_option("--budget-ms", common.budget_ms, "time budget per search");
        cmd->add_option("--workers", common.workers, "worker threads for verify");
    };

    // gen
    int arg_n = 0, arg_k = 0, arg_level = 0, arg_target_m = 0, arg_t = 4;
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    auto* gen_mm = gen->add_subcommand("moon-moser", "stacked triangulation by level");
    gen_mm->add_option("--level", arg_level, "stacking rounds from K4")->required();
    auto* gen_sub = gen->add_subcommand("moon-moser-sub", "order-n prefix of the stacked family");
    gen_sub->add_option("--n", arg_n, "order")->required();
    auto* gen_glued = gen->add_subcommand("glued", "triangulation lobes around one shared edge");
    gen_glued->add_option("--k", arg_k, "cycle-length parameter (>= 7)")->required();
    gen_glued->add_option("--n", arg_n, "order")->required();
    auto* gen_rnt = gen->add_subcommand("random-nt", "seeded random stacked triangulation");
    gen_rnt->add_option("--n", arg_n, "order")->required();
    auto* gen_r2c = gen->add_subcommand("random-2c", "random 2-connected with target m");
    gen_r2c->add_option("--n", arg_n, "order")->required();
    gen_r2c->add_option("--target-m", arg_target_m, "missing edges to aim for")->required();
    for (auto* sub : {gen_mm, gen_sub, gen_glued, gen_rnt, gen_r2c}) {
        sub->add_option("--out", common.out, "output path (default stdout)");
        sub->add_option("--format", common.format, "planar_code | text")
            ->check(CLI::IsMember({"planar_code", "text", "auto"}));
        sub->add_option("--seed", common.seed, "seed");
    }

    // analyze
    std::string re_emit;
    auto* analyze = app.add_subcommand("analyze", "report structure of input graphs");
    add_common(analyze);
    analyze->add_option("--re-emit", re_emit, "write the parsed graphs back out to this path");

    // extract
    auto* extract = app.add_subcommand("extract", "find a near-triangulation subgraph");
    add_common(extract);
    extract->add_option("--t", arg_t, "minimum witness order (>= 4)")->required();

    // cycles
    auto* cycles_cmd = app.add_subcommand("cycles", "exact cycle queries");
    cycles_cmd->require_subcommand(1);
    auto* cyc_longest = cycles_cmd->add_subcommand("longest", "exact circumference");
    auto* cyc_exact = cycles_cmd->add_subcommand("exact-k", "a cycle of exactly k vertices");
    cyc_exact->add_option("--k", arg_k, "cycle length")->required();
    auto* cyc_two = cycles_cmd->add_subcommand("two-k", "two vertex-disjoint k-cycles");
    cyc_two->add_option("--k", arg_k, "cycle length")->required();
    auto* cyc_bound = cycles_cmd->add_subcommand("upper-check", "prove circumference < bound");
    cyc_bound->add_option("--bound", arg_n, "bound to verify")->required();
    for (auto* sub : {cyc_longest, cyc_exact, cyc_two, cyc_bound}) add_common(sub);

    // verify
    std::string suite = "all", cert_path;
    int trials = 200;
    bool records = false;
    auto* verify = app.add_subcommand("verify", "run verification suites or check a certificate");
    add_common(verify);
    verify->add_option("--suite", suite,
                       "embedding | missing-edges | extraction | properties | glued | bounds | "
                       "short-circumference | all");
    verify->add_option("--trials", trials, "instances per suite");
    verify->add_option("--cert", cert_path, "check this certificate against the input graph");
    verify->add_option("--t", arg_t, "override the certificate's order requirement");
    verify->add_flag("--records", records, "emit one structured record per check");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "numeric thresholds for (n, t, k)");
    bounds_cmd->add_option("--n", arg_n, "order")->required();
    bounds_cmd->add_option("--t", arg_t, "extraction order parameter")->required();
    bounds_cmd->add_option("--k", arg_k, "cycle-length parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::vector<PlaneGraph> graphs;
            std::vector<std::string> comments;
            std::string config;
            if (gen_mm->parsed()) {
                graphs.push_back(moon_moser(arg_level));
                comments.push_back(moon_moser_spec_line(moon_moser_spec(arg_level)));
                config = run_config_line("gen moon-moser",
                                         {"--level " + std::to_string(arg_level)});
            } else if (gen_sub->parsed()) {
                graphs.push_back(moon_moser_subtriangulation(arg_n));
                comments.push_back("subtriangulation order=" + std::to_string(arg_n));
                config = run_config_line("gen moon-moser-sub", {"--n " + std::to_string(arg_n)});
            } else if (gen_glued->parsed()) {
                auto r = glued_construction(arg_n, arg_k);
                graphs.push_back(std::move(r.graph));
                comments.push_back(glued_spec_line(r.spec));
                config = run_config_line(
                    "gen glued", {"--k " + std::to_string(arg_k), "--n " + std::to_string(arg_n)});
            } else if (gen_rnt->parsed()) {
                graphs.push_back(random_near_triangulation(arg_n, common.seed));
                comments.push_back("random-nt n=" + std::to_string(arg_n) +
                                   " seed=" + std::to_string(common.seed));
                config = run_config_line("gen random-nt", {"--n " + std::to_string(arg_n),
                                                           "--seed " + std::to_string(common.seed)});
            } else {
                auto r = random_two_connected(arg_n, arg_target_m, common.seed);
                graphs.push_back(std::move(r.graph));
                comments.push_back("random-2c n=" + std::to_string(arg_n) + " target-m=" +
                                   std::to_string(arg_target_m) + " achieved-m=" +
                                   std::to_string(r.achieved_m) + " seed=" +
                                   std::to_string(common.seed));
                config = run_config_line(
                    "gen random-2c",
                    {"--n " + std::to_string(arg_n), "--target-m " + std::to_string(arg_target_m),
                     "--seed " + std::to_string(common.seed)});
            }
            if (common.format == "auto") common.format = "text";
            write_graphs(common, graphs, comments, config);
            return kExitOk;
        }

        if (analyze->parsed()) {
            auto graphs = read_graphs(common);
            std::cout << "# " << run_config_line("analyze", {common.input}) << "\n";
            for (size_t i = 0; i < graphs.size(); ++i)
                analyze_one(std::cout, graphs[i], static_cast<int>(i) + 1);
            if (!re_emit.empty()) {
                Common out = common;
                out.out = re_emit;
                if (out.format == "auto") out.format = "planar_code";
                write_graphs(out, graphs, {}, run_config_line("analyze --re-emit", {}));
            }
            return kExitOk;
        }

        if (extract->parsed()) {
            auto graphs = read_graphs(common);
            if (graphs.empty()) fail(Errc::FormatError, "no input graph");
            const auto& g = graphs.front();
            std::cout << "# " << run_config_line("extract", {"--t " + std::to_string(arg_t)})
                      << "\n";
            auto r = extract_near_triangulation(g, arg_t);
            std::cout << "# n=" << g.vertex_count << " m=" << missing_edge_count(g)
                      << " hypothesis=" << (r.hypothesis_held ? "holds" : "fails") << "\n";
            if (!r.witness) {
                std::cout << "# no witness\n";
                return r.hypothesis_held ? kExitVerificationFailure : kExitHypothesisNotMet;
            }
            std::string cert = serialize_witness(*r.witness);
            if (common.out.empty()) {
                std::cout << cert;
            } else {
                std::ofstream out(common.out);
                if (!out) fail(Errc::FormatError, "cannot open output " + common.out);
                out << cert;
                std::cout << "# witness order " << r.witness->order << " written to " << common.out
                          << "\n";
            }
            return kExitOk;
        }

        if (cycles_cmd->parsed()) {
            auto graphs = read_graphs(common);
            SearchBudget budget = common.budget_ms > 0 ? SearchBudget::millis(common.budget_ms)
                                                       : SearchBudget::unlimited();
            int code = kExitOk;
            std::cout << "# " << run_config_line("cycles", {}) << "\n";
            for (size_t i = 0; i < graphs.size(); ++i) {
                const auto& g = graphs[i];
                std::cout << "graph " << i + 1 << ":";
                if (cyc_longest->parsed()) {
                    auto r = longest_cycle(g, budget);
                    if (r.status == SearchStatus::Budget) {
                        std::cout << " budget-exceeded best-found=" << r.length << "\n";
                        code = kExitBudget;
                        continue;
                    }
                    std::cout << " circumference=" << r.length;
                    if (r.witness) {
                        std::cout << " cycle:";
                        for (VertexId v : r.witness->vertices) std::cout << " " << v;
                    }
                    std::cout << "\n";
                } else if (cyc_exact->parsed()) {
                    try {
                        auto w = cycle_of_length_exactly(g, arg_k, budget);
                        if (w) {
                            std::cout << " cycle:";
                            for (VertexId v : w->vertices) std::cout << " " << v;
                            std::cout << "\n";
                        } else {
                            std::cout << " none\n";
                        }
                    } catch (const GraphError&) {
                        std::cout << " budget-exceeded\n";
                        code = kExitBudget;
                    }
                } else if (cyc_two->parsed()) {
                    try {
                        auto w = two_disjoint_k_cycles(g, arg_k, budget);
                        if (w) {
                            std::cout << " first:";
                            for (VertexId v : w->first.vertices) std::cout << " " << v;
                            std::cout << " second:";
                            for (VertexId v : w->second.vertices) std::cout << " " << v;
                            std::cout << "\n";
                        } else {
                            std::cout << " none\n";
                        }
                    } catch (const GraphError&) {
                        std::cout << " budget-exceeded\n";
                        code = kExitBudget;
                    }
                } else {
                    try {
                        bool proven = circumference_upper_check(g, arg_n, budget);
                        std::cout << (proven ? " proven" : " refuted") << "\n";
                    } catch (const GraphError&) {
                        std::cout << " budget-exceeded\n";
                        code = kExitBudget;
                    }
                }
            }
            return code;
        }

        if (verify->parsed()) {
            if (!cert_path.empty()) {
                auto graphs = read_graphs(common);
                if (graphs.empty()) fail(Errc::FormatError, "no input graph");
                std::ifstream cin_file(cert_path);
                if (!cin_file) fail(Errc::FormatError, "cannot open certificate " + cert_path);
                auto w = parse_witness(cin_file);
                int t = verify->count("--t") ? arg_t : (w.requested_t > 0 ? w.requested_t : 4);
                bool ok = check_witness(graphs.front(), w, t);
                std::cout << "# " << run_config_line("verify --cert", {cert_path}) << "\n";
                std::cout << (ok ? "certificate valid" : "certificate INVALID") << " (order "
                          << w.order << ", t " << t << ")\n";
                return ok ? kExitOk : kExitVerificationFailure;
            }
            SuiteOptions opt;
            opt.seed = common.seed;
            opt.trials = trials;
            opt.workers = common.workers;
            opt.budget_ms = common.budget_ms;
            std::cout << "# "
                      << run_config_line("verify",
                                         {"--suite " + suite, "--seed " + std::to_string(opt.seed),
                                          "--trials " + std::to_string(opt.trials)})
                      << "\n";
            return run_verify_suite(suite, opt, std::cout, records);
        }

        if (bounds_cmd->parsed()) {
            auto p = bounds_profile(arg_n, arg_t, arg_k);
            std::cout << "# "
                      << run_config_line("bounds",
                                         {"--n " + std::to_string(arg_n),
                                          "--t " + std::to_string(arg_t),
                                          "--k " + std::to_string(arg_k)})
                      << "\n";
            std::cout << "extraction-threshold " << p.extraction_threshold.num << "/"
                      << p.extraction_threshold.den << "\n";
            std::cout << "min-circuit-order " << p.min_circuit_order << "\n";
            std::cout << "single-cycle-edge-upper " << p.ck_upper << "\n";
            std::cout << "pair-edge-upper " << p.two_ck_upper << "\n";
            if (p.two_ck_lower)
                std::cout << "pair-edge-lower " << *p.two_ck_lower << "\n";
            else
                std::cout << "pair-edge-lower undefined\n";
            return kExitOk;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::FormatError:
            case Errc::BadParameters:
            case Errc::KTooSmall:
            case Errc::BadOrder:
            case Errc::LevelTooLarge:
            case Errc::BadT:
                return kExitUsage;
            case Errc::BudgetExceeded:
                return kExitBudget;
            default:
                return kExitVerificationFailure;
        }
    }
    return kExitUsage;
}
