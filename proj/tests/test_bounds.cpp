#include "oracles.hpp"

#include "thetalab/bounds.hpp"
#include "thetalab/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace thetalab;

namespace {

const double kAsymptoticFourthOrder = 5.0 * std::pow(M_PI, 4) / 24.0;

// Gram matrix I + A / (2 cos(pi/g)) of an optimal representation of C_g.
SymmetricMatrix cycle_gram(std::size_t g) {
    const double t = 1.0 / (2.0 * std::cos(M_PI / static_cast<double>(g)));
    auto m = SymmetricMatrix::identity(g);
    for (auto [u, v] : cycle_graph(g).edges()) m.set(u, v, t);
    return m;
}

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("epsilon closed values") {
    CHECK(epsilon_ng(5, 1) == doctest::Approx(24.5));
    CHECK(epsilon_ng(2, 3) == doctest::Approx(0.5 * std::pow(std::pow(2.0, 1.0 / 3) - 1, 2)));
    CHECK(girth_theta_bound(10, 3) == doctest::Approx(2.0 + epsilon_ng(10, 3)));
    CHECK(alon_kahale_bound(9, 3) == doctest::Approx(3.0));
    CHECK_THROWS_AS(epsilon_ng(1, 3), InvalidArgument);
    CHECK_THROWS_AS(epsilon_ng(5, 4), InvalidArgument);
    // decreasing in g, increasing in n
    for (std::size_t g = 1; g < 50; g += 2) {
        CHECK(epsilon_ng(30, g + 2) < epsilon_ng(30, g));
        CHECK(epsilon_ng(31, g) > epsilon_ng(30, g));
    }
}

TEST_CASE("odd cycle closed forms") {
    for (std::size_t g = 3; g <= 101; g += 2) {
        CHECK(cycle_theta_exact(g) * cycle_theta_exact_direct(g) == doctest::Approx(static_cast<double>(g)));
        // 1 + sec x = 2 + x^2/2 + 5x^4/24 + ..., so the scaled error tends to 5 pi^4 / 24
        const double g4 = std::pow(static_cast<double>(g), 4);
        const double scaled = (cycle_theta_exact(g) - cycle_theta_asymptotic(g)) * g4;
        CHECK(scaled > 0.0);
        CHECK(std::abs(scaled - kAsymptoticFourthOrder) <= 150.0 / static_cast<double>(g * g));
    }
    CHECK(cycle_theta_exact(5) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("girth check on cycles and bipartite graphs") {
    for (std::size_t g = 3; g <= 15; g += 2) {
        const auto r = girth_theta_bound_check(cycle_graph(g));
        CHECK(r.holds);
        CHECK(r.rows.size() == (g - 1) / 2);
        CHECK(r.theta_complement.contains(cycle_theta_exact(g), 1e-7));
    }
    const auto q = girth_theta_bound_check(hypercube_graph(3), kDefaultTolerance, 21);
    CHECK(q.holds);
    CHECK(q.odd_girth.is_infinite());
    CHECK(q.rows.size() == 11);
    CHECK_THROWS_AS(girth_theta_bound_check(empty_graph(65)), InvalidArgument);
}

TEST_CASE("vertex-transitive product") {
    for (std::size_t n = 3; n <= 11; ++n) CHECK(vertex_transitive_product_check(cycle_graph(n)).holds);
    CHECK(vertex_transitive_product_check(petersen_graph()).holds);
    CHECK(vertex_transitive_product_check(hypercube_graph(3)).holds);
    CHECK_THROWS_AS(vertex_transitive_product_check(path_graph(4)), InvalidArgument);
}

TEST_CASE("Ramsey inputs") {
    CHECK(RamseyBoundInputs::from_delta(2, 0.25).n() == 5);
    CHECK(RamseyBoundInputs::from_vertices(2, 5).delta() == doctest::Approx(0.25));
    CHECK(RamseyBoundInputs::from_vertices(3, 16).delta() == doctest::Approx(1.0));
    CHECK_THROWS_AS(RamseyBoundInputs::from_delta(2, 0.0), InvalidArgument);
    CHECK_THROWS_AS(RamseyBoundInputs::from_delta(2, 1.5), InvalidArgument);
    CHECK_THROWS_AS(RamseyBoundInputs::from_delta(2, 0.3), InvalidArgument);
    CHECK_THROWS_AS(RamseyBoundInputs::from_vertices(2, 4), InvalidArgument);
    CHECK_THROWS_AS(RamseyBoundInputs::from_vertices(0, 2), InvalidArgument);
}

TEST_CASE("g bound derivation") {
    const auto d = derive_g_bound(RamseyBoundInputs::from_delta(2, 0.25));
    CHECK(d.g_bound == doctest::Approx(22.627416997969522));
    CHECK(d.chain_holds);
    for (std::size_t k = 1; k <= 10; ++k) {
        const std::size_t lo = (std::size_t{1} << k) + 1;
        const std::size_t hi = std::size_t{2} << k;
        for (std::size_t n = lo; n <= hi; n += std::max<std::size_t>(1, (hi - lo) / 7)) {
            const auto r = derive_g_bound(RamseyBoundInputs::from_vertices(k, n));
            CHECK(r.g_bound == doctest::Approx(4.0 * std::pow(k, 1.5) / std::sqrt(r.delta)));
            CHECK(static_cast<double>(r.largest_unrefuted_g) <= r.g_bound);
            CHECK(r.largest_unrefuted_g % 2 == 1);
            // the next odd g is refuted: (2 + eps)^k < n
            CHECK(std::pow(girth_theta_bound(n, r.largest_unrefuted_g + 2), k) < static_cast<double>(n));
            CHECK(r.chain.size() == 10);
        }
    }
}

TEST_CASE("elementary inequalities") {
    for (const auto& a : elementary_inequality_audit(20000)) {
        CHECK(a.holds);
        CHECK(a.min_margin >= 0.0);
    }
}

TEST_CASE("power traces count closed walks") {
    SymmetricMatrix a(5);
    for (auto [u, v] : cycle_graph(5).edges()) a.set(u, v, 1.0);
    const auto traces = power_traces(a, 6);
    const auto spectrum = oracle::cycle_spectrum(5);
    for (std::size_t l = 1; l <= 6; ++l) {
        double expected = 0.0;
        for (double mu : spectrum) expected += std::pow(mu, static_cast<double>(l));
        CHECK(traces[l - 1] == doctest::Approx(expected).scale(1.0));
    }
    CHECK(traces[0] == doctest::Approx(0.0).scale(1.0));
    CHECK(traces[2] == doctest::Approx(0.0).scale(1.0));
    CHECK(traces[4] == doctest::Approx(10.0));
}

TEST_CASE("girth lemma trace on odd cycles") {
    for (std::size_t g = 5; g <= 21; g += 2) {
        const auto t = girth_lemma_trace(cycle_graph(g), cycle_gram(g), g - 2);
        CHECK(t.holds);
        CHECK(t.max_odd_trace <= 1e-9);
        CHECK(t.lambda1 == doctest::Approx(cycle_theta_exact(g)));
        CHECK(t.lambda1 <= t.bound);
        CHECK(std::abs(t.chebyshev_sum) <= 1e-8 * static_cast<double>(g));
    }
    CHECK_THROWS_AS(girth_lemma_trace(cycle_graph(5), cycle_gram(5), 5), InvalidArgument);
}

}
