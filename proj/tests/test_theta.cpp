#include "oracles.hpp"

#include "thetalab/bounds.hpp"
#include "thetalab/error.hpp"
#include "thetalab/theta.hpp"

#include <doctest.h>

#include <cmath>

using namespace thetalab;

TEST_SUITE("theta") {

TEST_CASE("forced values") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto e = solve_theta(empty_graph(n));
        CHECK(e.lower <= e.upper);
        CHECK(e.bracket().contains(static_cast<double>(n), 1e-9));
        const auto k = solve_theta(complete_graph(n));
        CHECK(k.bracket().contains(1.0, 1e-9));
    }
    CHECK(solve_theta(cycle_graph(5)).bracket().contains(std::sqrt(5.0), 1e-9));
    CHECK(solve_theta(petersen_graph()).bracket().contains(4.0, 1e-9));
    CHECK(solve_theta(complement(petersen_graph())).bracket().contains(2.5, 1e-9));
}

TEST_CASE("odd cycles and their complements") {
    for (std::size_t g = 3; g <= 15; g += 2) {
        CHECK(solve_theta(cycle_graph(g)).bracket().contains(cycle_theta_exact_direct(g), 1e-8));
        CHECK(solve_theta(complement(cycle_graph(g))).bracket().contains(cycle_theta_exact(g), 1e-8));
    }
    for (std::size_t n = 4; n <= 12; n += 2) CHECK(solve_theta(cycle_graph(n)).bracket().contains(n / 2.0, 1e-8));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_theta(cycle_graph(5), 1e-12), InvalidArgument);
    CHECK_THROWS_AS(solve_theta(empty_graph(kMaxThetaVertices + 1)), InvalidArgument);
}

TEST_CASE("certificates re-validate and sandwich the true value") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const auto g = oracle::random_graph(3 + t % 8, 0.5, rng);
        const auto r = solve_theta(g);
        const auto check = check_certificates(g, r);
        CHECK(check.ok());
        CHECK(r.gap() <= 1e-7 + 1e-12);
        CHECK(r.primal_X.trace() == doctest::Approx(1.0));
        for (auto [u, v] : g.edges()) CHECK(r.primal_X(u, v) == 0.0);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) CHECK(r.dual_certificate(i, i) == 1.0);
        const auto alpha = oracle::alpha_by_subsets(g);
        const auto chi_bar = oracle::chromatic_by_assignment(complement(g));
        CHECK(r.upper >= alpha - 1e-9);
        CHECK(r.lower <= chi_bar + 1e-9);
    }
}

TEST_CASE("theta is invariant under relabelling and monotone under edge removal") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 15; ++t) {
        const auto g = oracle::random_graph(9, 0.5, rng);
        std::vector<Vertex> perm(9);
        for (Vertex i = 0; i < 9; ++i) perm[i] = (i * 4 + 1) % 9;
        const auto a = solve_theta(g);
        const auto b = solve_theta(relabel(g, perm));
        CHECK(std::abs(a.lower - b.lower) < 1e-6);
        const auto sub = edge_intersection(g, oracle::random_graph(9, 0.7, rng));
        CHECK(solve_theta(sub).upper >= a.lower - 1e-9);
    }
}

TEST_CASE("orthonormal representations") {
    CHECK_THROWS_AS(OrthonormalRepresentation(2, {{1.0, 1.0}}), InvalidArgument);
    const double s = 1.0 / std::sqrt(2.0);
    // K_2 complement: the two vectors must be orthogonal
    const OrthonormalRepresentation ok(2, {{1.0, 0.0}, {0.0, 1.0}}, std::vector<double>{s, s});
    CHECK(validate_representation(empty_graph(2), ok).valid);
    CHECK(handle_value(ok) == doctest::Approx(2.0));
    const OrthonormalRepresentation bad(2, {{1.0, 0.0}, {s, s}});
    const auto report = validate_representation(empty_graph(2), bad);
    CHECK_FALSE(report.valid);
    CHECK(report.worst_orthogonality == doctest::Approx(s));
    CHECK(validate_representation(complete_graph(2), bad).valid);
    const OrthonormalRepresentation zero_handle(2, {{1.0, 0.0}}, std::vector<double>{0.0, 1.0});
    CHECK(std::isinf(handle_value(zero_handle)));
}

TEST_CASE("Gram matrices give lower bounds on theta of the complement") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const auto r = oracle::random_representation(6, 1 + t % 4, rng);
        REQUIRE(validate_representation(r.graph, r.rep).valid);
        const double lb = gram_lambda1_lower_bound(r.graph, r.rep);
        CHECK(lb <= solve_theta(complement(r.graph)).upper + 1e-7);
        CHECK(gram_matrix(r.rep).trace() == doctest::Approx(6.0));
    }
}

TEST_CASE("tensor representations") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        const auto a = oracle::random_representation(5, 3, rng);
        const auto b = oracle::random_representation(5, 2, rng);
        const auto c = tensor_representation(a.rep, b.rep);
        CHECK(c.dim() == 6);
        CHECK(validate_representation(edge_intersection(a.graph, b.graph), c).valid);
        CHECK(handle_value(c) <= handle_value(a.rep) * handle_value(b.rep) * (1 + 1e-9));
    }
}

TEST_CASE("submultiplicativity on random pairs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const auto a = oracle::random_graph(7, 0.5, rng);
        const auto b = oracle::random_graph(7, 0.5, rng);
        CHECK(verify_submultiplicativity(a, b).holds);
        CHECK(verify_edge_union_bound(a, b).holds);
    }
    const auto c5 = cycle_graph(5);
    const auto r = verify_edge_union_bound(c5, complement(c5));
    CHECK(r.holds);
    CHECK(r.intersection.contains(5.0, 1e-7));
    CHECK(r.first.upper * r.second.upper == doctest::Approx(5.0).epsilon(1e-7));
}

}
