#include "cli.hpp"

#include "thetalab/bounds.hpp"
#include "thetalab/chebyshev.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/ramsey.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace thetalab::cli {
namespace {

struct RunConfig {
    double tol = kDefaultTolerance;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultProductCap;
    std::string format = "json";
    std::string out;
};

struct Failure {
    std::string inequality;
    double lhs;
    double rhs;
};

// Result of one subcommand: the report plus any failed inequality.
struct Outcome {
    Json report;
    std::vector<Failure> failures;
};

class UsageError : public Error {
public:
    using Error::Error;
};

struct GraphSource {
    std::string name;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* by_name = cmd->add_option("--graph", name, "generator, e.g. cycle:5, complete:4, petersen");
        auto* by_file = cmd->add_option("--file", file, "graph file ('p n m' / 'e u v')");
        by_name->excludes(by_file);
    }

    Graph load() const {
        if (!name.empty()) return graph_from_name(name);
        if (!file.empty()) return load_graph(file);
        throw UsageError("one of --graph or --file is required");
    }
};

struct ColouringSource {
    std::string name;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* by_name = cmd->add_option("--colouring", name, "mono:n, pentagons or binary:k");
        auto* by_file = cmd->add_option("--file", file, "colouring JSON file");
        by_name->excludes(by_file);
    }

    EdgeColouring load() const {
        if (!name.empty()) return colouring_from_name(name);
        if (!file.empty()) return load_colouring(file);
        throw UsageError("one of --colouring or --file is required");
    }
};

void render_human(std::ostream& os, const Json& j, const std::string& indent = "") {
    if (!j.is_object()) {
        os << indent << j.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << indent << key << ":\n";
            render_human(os, value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << indent << key << ":\n";
            for (const auto& item : value) {
                os << indent << "  -\n";
                render_human(os, item, indent + "    ");
            }
        } else {
            os << indent << key << ": " << value.dump() << '\n';
        }
    }
}

void write_matrix_file(const std::string& path, const SymmetricMatrix& m) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write matrix file '" + path + "'");
    f.precision(17);
    write_matrix(f, m);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Lovász theta, odd-girth bounds and odd-cycle Ramsey experiments", "thetalab"};
    app.require_subcommand(1);
    app.add_option("--tol", config.tol, "SDP gap tolerance")->check(CLI::Range(kMinTolerance, 1e-1));
    app.add_option("--seed", config.seed, "random seed");
    app.add_option("--cap", config.cap, "vertex cap for strong products")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
    app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--out", config.out, "write the report to this file");
    app.fallthrough();

    std::function<Outcome()> action;
    auto on = [&](CLI::App* cmd, std::function<Outcome()> fn) {
        cmd->callback([&action, fn = std::move(fn)] { action = fn; });
    };

    // graph
    auto* graph = app.add_subcommand("graph", "generate and inspect graphs")->require_subcommand(1);
    GraphSource gen_src, info_src, girth_src;
    std::string gen_target;
    auto* gen = graph->add_subcommand("gen", "write a generated graph in the text format");
    gen->add_option("--graph", gen_src.name, "generator name")->required();
    gen->add_option("--to", gen_target, "graph file to write");
    on(gen, [&] {
        const auto g = graph_from_name(gen_src.name);
        if (!gen_target.empty()) save_graph(gen_target, g);
        Json j = graph_info(g);
        j["edges"] = edges_json(g);
        return Outcome{j, {}};
    });
    auto* info = graph->add_subcommand("info", "vertex/edge counts and degrees");
    info_src.attach(info);
    on(info, [&] { return Outcome{graph_info(info_src.load()), {}}; });
    auto* girth_cmd = graph->add_subcommand("odd-girth", "shortest odd cycle with witness");
    girth_src.attach(girth_cmd);
    on(girth_cmd, [&] {
        const auto g = girth_src.load();
        const auto r = odd_girth(g);
        Json j{{"odd_girth", r.girth}, {"witness", nullptr}};
        Outcome o;
        if (r.witness) {
            j["witness"] = r.witness->vertices;
            if (!is_odd_cycle(g, *r.witness)) o.failures.push_back({"witness is an odd cycle of G", 0, 1});
        }
        o.report = j;
        return o;
    });

    // theta
    auto* theta = app.add_subcommand("theta", "Lovász theta with certificates")->require_subcommand(1);
    GraphSource solve_src, cert_src;
    auto* solve = theta->add_subcommand("solve", "certified bracket [lower, upper]");
    solve_src.attach(solve);
    on(solve, [&] {
        const auto r = solve_theta(solve_src.load(), config.tol);
        return Outcome{Json(ThetaSummary::of(r)), {}};
    });
    std::string dump_prefix;
    auto* certify = theta->add_subcommand("certify", "solve and re-check both certificates");
    cert_src.attach(certify);
    certify->add_option("--dump", dump_prefix, "write <prefix>.X and <prefix>.D matrices");
    on(certify, [&] {
        const auto g = cert_src.load();
        const auto r = solve_theta(g, config.tol);
        const auto check = check_certificates(g, r);
        if (!dump_prefix.empty()) {
            write_matrix_file(dump_prefix + ".X", r.primal_X);
            write_matrix_file(dump_prefix + ".D", r.dual_certificate);
        }
        Outcome o{Json{{"theta", ThetaSummary::of(r)}, {"check", check}}, {}};
        if (!check.reproduces_bracket) o.failures.push_back({"<J, X> <= lambda_1(D)", check.objective, check.dual_lambda1});
        if (!check.primal_feasible) o.failures.push_back({"lambda_min(X) >= 0", 0.0, check.primal_min_eigenvalue});
        return o;
    });

    // cheb
    auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials of the first kind")->require_subcommand(1);
    std::size_t eval_g = 1, coeff_g = 1;
    double eval_x = 1.0;
    auto* eval = cheb->add_subcommand("eval", "T_g(x) by recurrence and closed form");
    eval->add_option("--g", eval_g, "degree")->required()->check(CLI::PositiveNumber);
    eval->add_option("--x", eval_x, "point")->required();
    on(eval, [&] {
        const ChebDegree g(eval_g);
        const double rec = cheb_eval_recurrence(g, eval_x);
        Json j{{"g", eval_g}, {"x", eval_x}, {"recurrence", rec}, {"closed", nullptr}, {"lower_bound", nullptr}};
        Outcome o;
        if (eval_x >= 1.0) {
            j["closed"] = cheb_eval_closed(g, eval_x);
            if (g.odd()) {
                const double lb = cheb_lower_bound(g, eval_x);
                j["lower_bound"] = lb;
                if (lb > rec * (1 + 1e-12)) o.failures.push_back({"(1 + sqrt(x^2 - 1))^g / 2 <= T_g(x)", lb, rec});
            }
        }
        o.report = j;
        return o;
    });
    auto* coeffs = cheb->add_subcommand("coeffs", "exact monomial coefficients, as strings");
    coeffs->add_option("--g", coeff_g, "degree")->required()->check(CLI::Range(std::size_t{1}, kMaxExactChebDegree));
    on(coeffs, [&] {
        return Outcome{Json{{"g", coeff_g}, {"coefficients", cheb_coefficients_json(cheb_coefficients(ChebDegree(coeff_g)))}}, {}};
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "odd-girth theta bounds")->require_subcommand(1);
    std::size_t audit_points = 100000;
    auto* audit = bounds->add_subcommand("audit", "grid audit of the elementary inequalities");
    audit->add_option("--points", audit_points, "grid size")->check(CLI::Range(2, 100000000));
    on(audit, [&] {
        const auto rows = elementary_inequality_audit(audit_points);
        Outcome o{Json{{"audits", rows}}, {}};
        for (const auto& r : rows)
            if (!r.holds) o.failures.push_back({r.name + " (margin at argmin)", r.min_margin, 0.0});
        return o;
    });
    GraphSource gc_src;
    std::size_t g_cap = kDefaultGirthCap;
    auto* gcheck = bounds->add_subcommand("girth-check", "theta(compl G) <= 2 + eps_{n,g} for each odd g below the odd girth");
    gc_src.attach(gcheck);
    gcheck->add_option("--g-cap", g_cap, "largest g to test (odd)");
    on(gcheck, [&] {
        const auto r = girth_theta_bound_check(gc_src.load(), config.tol, g_cap);
        Outcome o{Json(r), {}};
        for (const auto& row : r.rows)
            if (!row.holds)
                o.failures.push_back({"theta(compl G) <= 2 + eps_{n," + std::to_string(row.g) + "}",
                                      row.theta_bracket.upper, row.girth_bound + row.slack});
        return o;
    });
    std::size_t gb_k = 0, gb_n = 0;
    double gb_delta = 0.0;
    auto* gbound = bounds->add_subcommand("g-bound", "4 k^(3/2) delta^(-1/2) and its derivation chain");
    gbound->add_option("--k", gb_k, "number of colours")->required();
    auto* delta_opt = gbound->add_option("--delta", gb_delta, "n = (1 + delta) 2^k");
    auto* n_opt = gbound->add_option("--n", gb_n, "vertex count, 2^k < n <= 2^(k+1)");
    delta_opt->excludes(n_opt);
    on(gbound, [&] {
        if (!*delta_opt && !*n_opt) throw UsageError("one of --delta or --n is required");
        const auto inputs = *delta_opt ? RamseyBoundInputs::from_delta(gb_k, gb_delta)
                                       : RamseyBoundInputs::from_vertices(gb_k, gb_n);
        return Outcome{Json(derive_g_bound(inputs)), {}};
    });

    // colouring
    auto* colouring = app.add_subcommand("colouring", "edge colourings of K_n")->require_subcommand(1);
    ColouringSource verify_src, pipe_src;
    auto* verify = colouring->add_subcommand("verify", "shortest monochromatic odd cycle with witness");
    verify_src.attach(verify);
    on(verify, [&] {
        const auto c = verify_src.load();
        const auto r = shortest_mono_odd_cycle(c);
        Outcome o{Json{{"n", c.vertex_count()}, {"k", c.colour_count()}, {"mono_odd_cycle", r}}, {}};
        if (r.witness && !is_odd_cycle(colour_class(c, *r.colour), *r.witness))
            o.failures.push_back({"witness is a monochromatic odd cycle", 0, 1});
        return o;
    });
    std::size_t pipe_cap = kDefaultGirthCap;
    auto* pipeline = colouring->add_subcommand("pipeline", "n <= prod_i theta(compl G_i) <= prod_i (2 + eps_{n,g_i})");
    pipe_src.attach(pipeline);
    pipeline->add_option("--g-cap", pipe_cap, "g used for bipartite colour classes (odd)");
    on(pipeline, [&] {
        const auto r = theta_pipeline(pipe_src.load(), config.tol, pipe_cap);
        Outcome o{Json(r), {}};
        if (!r.product_holds) o.failures.push_back({"n <= prod theta(compl G_i)", r.lhs, r.product.upper + r.slack});
        if (!r.girth_product_holds)
            o.failures.push_back({"n <= prod (2 + eps_{n,g_i})", r.lhs - r.slack, r.girth_bound_product});
        for (const auto& row : r.rows)
            if (!row.holds)
                o.failures.push_back({"theta(compl G_" + std::to_string(row.colour) + ") <= 2 + eps",
                                      row.theta_complement.upper, row.bound + row.slack});
        if (!r.g_bound_holds)
            o.failures.push_back({"shortest mono odd cycle <= g bound",
                                  r.shortest_mono_odd_cycle ? static_cast<double>(*r.shortest_mono_odd_cycle) : INFINITY,
                                  r.g_bound.value_or(0.0)});
        return o;
    });
    std::size_t search_n = 0, search_k = 0, search_iters = 100000;
    std::string search_target;
    auto* search = colouring->add_subcommand("search", "local search for colourings avoiding short mono odd cycles");
    search->add_option("--n", search_n, "vertices")->required();
    search->add_option("--k", search_k, "colours")->required();
    search->add_option("--iterations", search_iters, "move budget");
    search->add_option("--to", search_target, "write the best colouring to this file");
    on(search, [&] {
        const auto r = local_search_colouring(search_n, search_k, config.seed, search_iters);
        if (!search_target.empty()) save_colouring(search_target, r.best);
        return Outcome{Json(r), {}};
    });
    std::size_t brute_k = 0;
    auto* brute = colouring->add_subcommand("brute-force", "exhaustive L(k) for k in {1, 2}");
    brute->add_option("--k", brute_k, "colours")->required();
    on(brute, [&] {
        const auto r = brute_force_L(brute_k);
        Outcome o{Json(r), {}};
        if (!r.every_colouring_has_odd_cycle)
            o.failures.push_back({"every colouring of K_{2^k+1} has a mono odd cycle", 0, 1});
        return o;
    });

    // capacity
    auto* capacity = app.add_subcommand("capacity", "Shannon-capacity diagonal argument")->require_subcommand(1);
    ColouringSource cap_src;
    std::size_t max_factors = 3;
    auto* witness = capacity->add_subcommand("witness", "diagonal independence in the strong product of the complements");
    cap_src.attach(witness);
    witness->add_option("--max-factors", max_factors, "largest number of colours accepted");
    on(witness, [&] {
        const auto c = cap_src.load();
        const auto r = capacity_witness(c, max_factors, config.cap);
        Outcome o{Json(r), {}};
        if (!r.diagonal_independent) o.failures.push_back({"diagonal is independent", 0, 1});
        if (!r.induced_in_strong_power) o.failures.push_back({"product embeds induced in the strong power", 0, 1});
        if (r.alpha && r.alpha->value < c.vertex_count())
            o.failures.push_back({"n <= alpha(product)", static_cast<double>(c.vertex_count()),
                                  static_cast<double>(r.alpha->value)});
        return o;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (!action) {
        err << app.help();
        return kExitUsage;
    }

    Outcome outcome;
    try {
        outcome = action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ostringstream text;
    text.precision(12);
    if (config.format == "json") {
        text << outcome.report.dump(2) << '\n';
    } else {
        render_human(text, outcome.report);
    }
    if (config.out.empty()) {
        out << text.str();
    } else {
        std::ofstream f(config.out);
        if (!f) {
            err << "error: cannot write '" << config.out << "'\n";
            return kExitUsage;
        }
        f << text.str();
    }

    for (const auto& f : outcome.failures) {
        err.precision(17);
        err << "check failed: " << f.inequality << " (lhs = " << f.lhs << ", rhs = " << f.rhs << ")\n";
    }
    return outcome.failures.empty() ? kExitOk : kExitCheckFailed;
}

} // namespace thetalab::cli
