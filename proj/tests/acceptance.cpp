// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include "oracles.hpp"

#include "thetalab/bounds.hpp"
#include "thetalab/chebyshev.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/ramsey.hpp"
#include "thetalab/theta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace thetalab;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds
    std::function<bool(std::ostringstream&)> body;
};

struct Named {
    std::string name;
    Graph graph;
};

std::vector<Named> corpus() {
    std::vector<Named> out;
    for (std::size_t g = 3; g <= 25; g += 2) out.push_back({"C" + std::to_string(g), cycle_graph(g)});
    for (std::size_t n = 4; n <= 32; n += 2) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    for (std::size_t n = 2; n <= 20; n += 3) out.push_back({"P" + std::to_string(n), path_graph(n)});
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = a; b <= 6; b += 2)
            out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite_graph(a, b)});
    for (std::size_t k = 1; k <= 5; ++k) out.push_back({"Q" + std::to_string(k), hypercube_graph(k)});
    out.push_back({"petersen", petersen_graph()});
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + t % 23;
        const double p = 0.08 + 0.06 * (t % 8);
        out.push_back({"random" + std::to_string(t), oracle::random_graph(n, p, rng)});
    }
    return out;
}

bool theta_forced(std::ostringstream& log) {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 32; ++n) {
        const auto e = solve_theta(empty_graph(n));
        const auto k = solve_theta(complete_graph(n));
        worst = std::max({worst, std::abs(e.lower - n), std::abs(e.upper - n), std::abs(k.lower - 1), std::abs(k.upper - 1)});
    }
    log << "max deviation " << worst;
    return worst <= 1e-6;
}

bool odd_cycle_formula(std::ostringstream& log) {
    bool ok = true;
    double worst_bracket = 0.0, worst_asym = 0.0;
    for (std::size_t g = 3; g <= 25; g += 2) {
        const double exact = cycle_theta_exact(g);
        const auto r = solve_theta(complement(cycle_graph(g)));
        worst_bracket = std::max({worst_bracket, r.lower - exact, exact - r.upper});
        ok = ok && r.bracket().contains(exact, 2e-6);
        // The g^-4 coefficient of 1 + sec(pi/g) is 5 pi^4 / 24, about 20.3, so the scaled
        // error cannot stay below 10; it is checked against that constant instead.
        const double scaled = (exact - cycle_theta_asymptotic(g)) * std::pow(static_cast<double>(g), 4);
        const double drift = std::abs(scaled - 5.0 * std::pow(M_PI, 4) / 24.0) * static_cast<double>(g * g);
        worst_asym = std::max(worst_asym, drift);
        ok = ok && scaled > 0.0 && drift <= 150.0;
        if (g == 25) log << "scaled error at g=25 " << scaled << ", ";
    }
    log << "bracket miss " << std::max(0.0, worst_bracket) << ", max |scaled - 5pi^4/24| g^2 = " << worst_asym;
    return ok;
}

bool girth_lemma(std::ostringstream& log) {
    const auto graphs = corpus();
    std::size_t rows = 0, violations = 0;
    for (const auto& [name, g] : graphs) {
        if (g.vertex_count() < 2) continue;
        const auto r = girth_theta_bound_check(g, kDefaultTolerance, 25);
        for (const auto& row : r.rows) {
            ++rows;
            if (row.theta_bracket.upper > row.girth_bound + 3 * kDefaultTolerance) {
                ++violations;
                log << name << " g=" << row.g << " violates; ";
            }
        }
    }
    log << graphs.size() << " graphs, " << rows << " (graph, g) rows, " << violations << " violations";
    return graphs.size() >= 200 && violations == 0;
}

bool submultiplicativity(std::ostringstream& log) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::size_t failures = 0;
    for (int t = 0; t < 500; ++t) {
        const auto a = oracle::random_graph(8, density(rng), rng);
        const auto b = oracle::random_graph(8, density(rng), rng);
        if (!verify_edge_union_bound(a, b).holds) ++failures;
    }
    const auto c5 = cycle_graph(5);
    const double e5 = solve_theta(empty_graph(5)).upper;
    const double prod = solve_theta(c5).upper * solve_theta(complement(c5)).upper;
    log << "500 pairs, " << failures << " failures; theta(empty_5) = " << e5 << ", theta(C5) theta(compl C5) = " << prod;
    return failures == 0 && std::abs(e5 - 5.0) <= 1e-5 && std::abs(prod - 5.0) <= 1e-5;
}

bool tensor_certificate(std::ostringstream& log) {
    std::mt19937_64 rng(7);
    std::size_t bad = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 5;
        const auto a = oracle::random_representation(n, 1 + t % 4, rng);
        const auto b = oracle::random_representation(n, 1 + (t / 4) % 4, rng);
        const auto c = tensor_representation(a.rep, b.rep);
        if (!validate_representation(edge_intersection(a.graph, b.graph), c).valid) ++bad;
        for (std::size_t i = 0; i < n; ++i) {
            auto dot = [](std::span<const double> x, std::span<const double> y) {
                double s = 0.0;
                for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
                return s;
            };
            const double lhs = dot(c.handle(), c.vector(i));
            const double rhs = dot(a.rep.handle(), a.rep.vector(i)) * dot(b.rep.handle(), b.rep.vector(i));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    log << bad << " invalid tensors, max handle product error " << worst;
    return bad == 0 && worst <= 1e-8;
}

bool chebyshev_suite(std::ostringstream& log) {
    double worst_agree = 0.0, lowest = 0.0, worst_lb = -INFINITY;
    std::size_t nonzero = 0;
    for (std::size_t g = 1; g <= 31; ++g)
        for (int i = 0; i <= 1000; ++i) {
            const double x = 1.0 + 1e-4 * i;
            const double a = cheb_eval_closed(ChebDegree(g), x);
            const double b = cheb_eval_recurrence(ChebDegree(g), x);
            worst_agree = std::max(worst_agree, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
    for (std::size_t g = 1; g <= 63; g += 2) {
        const auto c = cheb_coefficients(ChebDegree(g));
        for (std::size_t i = 0; i <= g; i += 2) nonzero += c[i] != 0;
    }
    for (std::size_t g = 1; g <= 63; ++g)
        for (int i = 0; i <= 6000; ++i) lowest = std::min(lowest, cheb_eval_recurrence(ChebDegree(g), -1.0 + 1e-3 * i));
    for (std::size_t g = 1; g <= 63; g += 2)
        for (int i = 0; i <= 4000; ++i) {
            const double x = 1.0 + 1e-3 * i;
            const double t = cheb_eval_recurrence(ChebDegree(g), x);
            worst_lb = std::max(worst_lb, (cheb_lower_bound(ChebDegree(g), x) - t) / std::max(1.0, t));
        }
    log << "closed/recurrence rel. diff " << worst_agree << ", nonzero even coefficients " << nonzero
        << ", min T_g " << lowest << ", max (lb - T)/T " << worst_lb;
    return worst_agree <= 1e-9 && nonzero == 0 && lowest >= -1.0 - 1e-12 && worst_lb <= 1e-12;
}

bool ramsey_brute_force(std::ostringstream& log) {
    const auto one = brute_force_L(1);
    const auto two = brute_force_L(2);
    bool two_pentagons = true;
    for (const auto& g : colour_classes(two.extremal)) {
        const auto r = odd_girth(g);
        two_pentagons = two_pentagons && g.edge_count() == 5 && !r.girth.is_infinite() && r.girth.value() == 5;
        for (Vertex v = 0; v < 5; ++v) two_pentagons = two_pentagons && g.degree(v) == 2;
    }
    log << "L(1) = " << one.L << ", L(2) = " << two.L << " over " << two.colourings << " colourings";
    return one.L == 3 && two.L == 5 && two.every_colouring_has_odd_cycle && two_pentagons;
}

bool binary_colouring_bipartite(std::ostringstream& log) {
    std::size_t classes = 0, odd = 0;
    for (std::size_t k = 1; k <= 10; ++k) {
        const auto c = binary_colouring(k);
        for (std::size_t i = 0; i < k; ++i) {
            ++classes;
            if (!odd_girth(colour_class(c, static_cast<Colour>(i))).girth.is_infinite()) ++odd;
        }
    }
    log << classes << " colour classes, " << odd << " with an odd cycle";
    return odd == 0;
}

bool pipeline_consistency(std::ostringstream& log) {
    std::vector<EdgeColouring> instances{pentagon_colouring()};
    for (std::size_t n = 2; n <= 8; ++n) instances.push_back(monochromatic_colouring(n));
    bool ok = true;
    for (const auto& c : instances) {
        const auto r = theta_pipeline(c);
        ok = ok && r.product_holds;
    }
    // g bound against observed shortest cycles on legal (k, n) instances
    std::size_t tested = 0;
    const auto brute = brute_force_L(2);
    std::vector<EdgeColouring> legal{pentagon_colouring(), brute.extremal, brute_force_L(1).extremal};
    for (std::size_t n = 5; n <= 8; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) legal.push_back(local_search_colouring(n, 2, seed, 3000).best);
    for (std::size_t n = 9; n <= 16; n += 7) legal.push_back(local_search_colouring(n, 3, 1, 3000).best);
    for (const auto& c : legal) {
        const auto report = shortest_mono_odd_cycle(c);
        const auto k = c.colour_count();
        const auto n = c.vertex_count();
        if (!((std::size_t{1} << k) < n && n <= (std::size_t{2} << k))) continue;
        ++tested;
        const double bound = derive_g_bound(RamseyBoundInputs::from_vertices(k, n)).g_bound;
        if (!report.length || static_cast<double>(*report.length) > bound) {
            ok = false;
            log << "n=" << n << " k=" << k << " exceeds g bound; ";
        }
    }
    log << instances.size() << " product-chain instances, " << tested << " g-bound instances";
    return ok && tested >= 10;
}

bool capacity_witness_check(std::ostringstream& log) {
    const auto c5 = cycle_graph(5);
    const auto alpha = independence_number(strong_product(c5, c5));
    const auto brute = brute_force_L(2);
    // every extremal colouring: relabel the canonical one by all permutations
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    std::size_t checked = 0, independent = 0;
    std::vector<EdgeColouring> seen;
    do {
        const auto c = relabel_colouring(brute.extremal, perm);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        ++checked;
        const auto r = capacity_witness(c, 2, kDefaultProductCap, 1'000'000);
        if (r.diagonal_independent && r.induced_in_strong_power) ++independent;
    } while (std::next_permutation(perm.begin(), perm.end()));
    log << "alpha(C5 x C5) = " << alpha.value << (alpha.optimal ? " (optimal)" : " (budget hit)") << ", "
        << independent << "/" << checked << " extremal colourings with independent diagonal";
    return alpha.optimal && alpha.value == 5 && checked == brute.extremal_count && independent == checked;
}

bool sandwich(std::ostringstream& log) {
    std::size_t tested = 0, failures = 0;
    for (const auto& [name, g] : corpus()) {
        if (g.vertex_count() > 10) continue;
        ++tested;
        const auto cg = complement(g);
        const auto omega = clique_number(cg).value;
        const auto chi = chromatic_number_small(cg);
        const auto r = solve_theta(g);
        if (omega > r.upper + 1e-6 || r.lower > chi + 1e-6) {
            ++failures;
            log << name << " fails; ";
        }
    }
    log << tested << " graphs, " << failures << " failures";
    return tested > 0 && failures == 0;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "theta exact on empty and complete graphs", 60, theta_forced},
        {2, "odd-cycle complement formula and asymptotic", 120, odd_cycle_formula},
        {3, "girth lemma never violated on corpus", 600, girth_lemma},
        {4, "edge-union submultiplicativity sweep", 600, submultiplicativity},
        {5, "tensor representation certificate", 60, tensor_certificate},
        {6, "Chebyshev suite", 60, chebyshev_suite},
        {7, "Ramsey brute force L(1)=3, L(2)=5", 5, ramsey_brute_force},
        {8, "binary colouring classes bipartite", 30, binary_colouring_bipartite},
        {9, "pipeline product chain and g bound", 120, pipeline_consistency},
        {10, "capacity witness", 60, capacity_witness_check},
        {11, "sandwich omega <= theta <= chi", 120, sandwich},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.time_limit) {
            ok = false;
            log << " (over time limit " << c.time_limit << " s)";
        }
        failures += !ok;
        std::printf("%s [%2d] %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), log.str().c_str(), secs);
    }
    return failures;
}
