#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "frustrix/census.hpp"
#include "frustrix/families.hpp"
#include "frustrix/sgio.hpp"
#include "frustrix/solver.hpp"
#include "frustrix/structure.hpp"
#include "frustrix/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

int run_solve(const std::string& input_path, const std::string& method, bool as_json) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input_path.empty() && input_path != "-") {
        file.open(input_path);
        if (!file) {
            std::cerr << "cannot open " << input_path << "\n";
            return kExitUsage;
        }
        in = &file;
    }
    bool any_parse_error = false, any_capacity_error = false;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            frustrix::SignedGraph g = frustrix::from_signed_line(line);
            frustrix::FrustrationResult res = method == "bb"
                                                  ? frustrix::frustration_branch_bound(g)
                                                  : frustrix::frustration_bruteforce(g);
            bool minimal = g.negative_edge_count() == res.f;
            if (as_json) {
                nlohmann::json j;
                j["line"] = lineno;
                j["n"] = g.vertex_count();
                j["m"] = g.edge_count();
                j["F"] = res.f;
                j["witness_hex"] = res.witness_signature.hex();
                j["minimal"] = minimal;
                j["states_explored"] = res.states_explored;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "F=" << res.f << " witness=" << res.witness_signature.hex()
                          << " minimal=" << (minimal ? "yes" : "no") << "\n";
            }
        } catch (const frustrix::capacity_error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_capacity_error = true;
        } catch (const frustrix::error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_parse_error = true;
        }
    }
    if (any_capacity_error) return kExitCapacity;
    if (any_parse_error) return kExitUsage;
    return kExitOk;
}

int run_family(const std::string& name, const std::string& gadgets, int k) {
    using frustrix::GadgetKind;
    try {
        if (name == "gamma1" || name == "gamma2" || name == "gamma3" || name == "gamma4" ||
            name == "gamma5") {
            std::cout << frustrix::to_signed_line(frustrix::gamma(name[5] - '0')) << "\n";
        } else if (name == "chain") {
            if (gadgets.size() < 2) {
                std::cerr << "chain: --gadgets needs at least two of 't'/'g'\n";
                return kExitUsage;
            }
            std::vector<GadgetKind> kinds;
            for (char c : gadgets) {
                if (c == 't')
                    kinds.push_back(GadgetKind::Triangle);
                else if (c == 'g')
                    kinds.push_back(GadgetKind::Gamma1TwoSub);
                else {
                    std::cerr << "chain: bad gadget char '" << c << "' (use t or g)\n";
                    return kExitUsage;
                }
            }
            std::cout << frustrix::to_signed_line(frustrix::gadget_chain(kinds)) << "\n";
        } else if (name == "tritree") {
            std::cout << frustrix::to_signed_line(frustrix::triangle_tree_path(k)) << "\n";
        } else if (name == "petersen") {
            std::cout << frustrix::to_signed_line(frustrix::petersen_negative()) << "\n";
        } else if (name == "w1") {
            std::cout << frustrix::to_signed_line(frustrix::w_graphs().first) << "\n";
        } else if (name == "w2") {
            std::cout << frustrix::to_signed_line(frustrix::w_graphs().second) << "\n";
        } else if (name == "digon") {
            // Digons have no graph6 form; print a structured description.
            frustrix::SignedGraph g = frustrix::digon_graph(k < 2 ? 2 : k);
            nlohmann::json j;
            j["family"] = "digon";
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            for (const auto& e : g.edges())
                j["edges"].push_back({e.u, e.v, std::string(1, frustrix::sign_char(e.sign))});
            std::cout << j.dump() << "\n";
        } else {
            std::cerr << "unknown family '" << name << "'\n";
            return kExitUsage;
        }
    } catch (const frustrix::error& e) {
        std::cerr << name << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(const std::string& theorem, int nmax, const std::string& out_path, int workers) {
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitUsage;
        }
        out = &out_file;
    }
    frustrix::VerifyOptions opts;
    opts.workers = workers;
    opts.sink = [&](const frustrix::ReportRecord& r) {
        *out << frustrix::record_json_line(r) << "\n";
    };
    try {
        std::vector<frustrix::VerificationReport> reports;
        if (theorem == "main") {
            reports.push_back(frustrix::verify_main_theorem(nmax > 0 ? nmax : 9, opts));
        } else if (theorem == "eq38") {
            reports.push_back(frustrix::verify_3n2_over_8(nmax > 0 ? nmax : 9, opts));
        } else if (theorem == "cubic29") {
            reports.push_back(frustrix::verify_cubic_corollary(10, opts));
            if (nmax >= 12) reports.push_back(frustrix::verify_cubic_corollary(12, opts));
        } else if (theorem == "small") {
            reports.push_back(frustrix::verify_small_characterization(opts));
        } else if (theorem == "girth5") {
            reports.push_back(frustrix::probe_girth5_conjecture(nmax > 0 ? nmax : 10, opts));
        } else {
            std::cerr << "unknown theorem '" << theorem << "'\n";
            return kExitUsage;
        }
        long long violations = 0;
        for (const auto& rep : reports) {
            *out << frustrix::summary_json_line(rep.summary) << "\n";
            violations += rep.summary.violations;
            std::cerr << rep.summary.theorem_id << ": graphs=" << rep.summary.graphs_scanned
                      << " classes=" << rep.summary.classes_scanned
                      << " equalities=" << rep.summary.equalities
                      << " exceptions=" << rep.summary.exceptions
                      << " violations=" << rep.summary.violations << " ("
                      << rep.summary.elapsed_seconds << "s)\n";
            for (const auto& note : rep.summary.notes) std::cerr << "  " << note << "\n";
        }
        if (theorem == "girth5") return kExitOk;  // counterexamples are findings, not failures
        return violations == 0 ? kExitOk : kExitViolations;
    } catch (const frustrix::capacity_error& e) {
        std::cerr << e.what() << "\n";
        return kExitCapacity;
    }
}

int run_reduce(const std::string& input_path, bool trace) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input_path.empty() && input_path != "-") {
        file.open(input_path);
        if (!file) {
            std::cerr << "cannot open " << input_path << "\n";
            return kExitUsage;
        }
        in = &file;
    }
    bool any_capacity = false, any_parse = false;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            frustrix::SignedGraph g = frustrix::from_signed_line(line);
            frustrix::ReductionTrace rt = frustrix::reduce_to_fixpoint(g);
            std::cout << "line " << lineno << ": n=" << g.vertex_count()
                      << " negatives=" << g.negative_edge_count()
                      << " normalization_switches=" << rt.normalization_switches << "\n";
            int i = 0;
            for (const auto& step : rt.steps) {
                std::cout << "  step " << ++i << ": " << frustrix::rule_name(step.rule)
                          << " vertices=[";
                for (std::size_t j = 0; j < step.matched_vertices.size(); ++j)
                    std::cout << (j ? "," : "") << step.matched_vertices[j];
                std::cout << "] offset=" << step.offset << " -> n=" << step.output.vertex_count()
                          << "\n";
                if (trace)
                    for (const auto& c : step.conditions_checked)
                        std::cout << "      " << c.name << ": " << (c.passed ? "ok" : "FAILED")
                                  << "\n";
            }
            int f_final = frustrix::frustration_index(rt.final_graph);
            std::cout << "  final: n=" << rt.final_graph.vertex_count()
                      << " total_offset=" << rt.total_offset << " F(final)=" << f_final
                      << " F(input)=" << rt.total_offset + f_final << "\n";
        } catch (const frustrix::rule_inapplicable_error& e) {
            std::cout << "  rule inapplicable: " << e.what() << "\n";
        } catch (const frustrix::capacity_error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_capacity = true;
        } catch (const frustrix::error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_parse = true;
        }
    }
    if (any_capacity) return kExitCapacity;
    if (any_parse) return kExitUsage;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frustrix: exact frustration indices of signed subcubic graphs"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve signed graph6 lines from a file or stdin");
    std::string solve_input, solve_method = "brute";
    bool solve_json = false;
    solve->add_option("input", solve_input, "input file ('-' for stdin)");
    solve->add_option("--method", solve_method, "brute|bb")->check(CLI::IsMember({"brute", "bb"}));
    solve->add_flag("--json", solve_json, "JSON output, one object per line");

    auto* family = app.add_subcommand("family", "emit a named signed graph family");
    std::string family_name, family_gadgets;
    int family_k = 0;
    family->add_option("name", family_name,
                       "gamma1..gamma5|chain|tritree|petersen|w1|w2|digon")
        ->required();
    family->add_option("--gadgets", family_gadgets, "chain gadgets, e.g. ttg");
    family->add_option("--k", family_k, "tritree internal vertices / digon count");

    auto* verify = app.add_subcommand("verify", "run a theorem harness over the census");
    std::string verify_theorem, verify_out;
    int verify_nmax = 0, verify_workers = 1;
    verify->add_option("theorem", verify_theorem, "main|eq38|cubic29|small|girth5")->required();
    verify->add_option("--nmax", verify_nmax, "largest vertex count to scan");
    verify->add_option("--out", verify_out, "write the JSON-lines report here");
    verify->add_option("--workers", verify_workers, "worker threads")->check(CLI::PositiveNumber);

    auto* reduce = app.add_subcommand("reduce", "apply reducible configurations to a fixpoint");
    std::string reduce_input;
    bool reduce_trace = false;
    reduce->add_option("input", reduce_input, "input file ('-' for stdin)");
    reduce->add_flag("--trace", reduce_trace, "print per-step side conditions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed()) return run_solve(solve_input, solve_method, solve_json);
    if (family->parsed()) return run_family(family_name, family_gadgets, family_k);
    if (verify->parsed()) return run_verify(verify_theorem, verify_nmax, verify_out, verify_workers);
    if (reduce->parsed()) return run_reduce(reduce_input, reduce_trace);
    return kExitUsage;
}
