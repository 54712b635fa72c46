#include "thetalab/bounds.hpp"

#include "thetalab/chebyshev.hpp"
#include "thetalab/error.hpp"
#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace thetalab {

namespace {

void require_odd(std::size_t g) {
    if (g < 1 || g % 2 == 0) throw InvalidArgument("g must be an odd positive integer, got " + std::to_string(g));
}

// x^(1/g) as exp(ln(x)/g) in extended precision
long double root(long double x, std::size_t g) { return std::exp(std::log(x) / static_cast<long double>(g)); }

long double epsilon_ld(std::size_t n, std::size_t g) {
    const long double r = root(2.0L * static_cast<long double>(n) - 2.0L, g) - 1.0L;
    return 0.5L * r * r;
}

constexpr double kUlp = std::numeric_limits<double>::epsilon();

} // namespace

double epsilon_ng(std::size_t n, std::size_t g) {
    if (n < 2) throw InvalidArgument("epsilon_ng needs n >= 2");
    require_odd(g);
    return static_cast<double>(epsilon_ld(n, g));
}

double girth_theta_bound(std::size_t n, std::size_t g) { return 2.0 + epsilon_ng(n, g); }

double alon_kahale_bound(std::size_t n, std::size_t g) {
    if (n < 2) throw InvalidArgument("alon_kahale_bound needs n >= 2");
    require_odd(g);
    return static_cast<double>(1.0L + root(static_cast<long double>(n) - 1.0L, g));
}

GirthCheckReport girth_theta_bound_check(const Graph& g, double tol, std::size_t g_cap) {
    const auto n = g.vertex_count();
    if (n < 2 || n > kMaxGirthCheckVertices) {
        throw InvalidArgument("girth_theta_bound_check needs 2 <= n <= " + std::to_string(kMaxGirthCheckVertices));
    }
    GirthCheckReport report;
    report.n = n;
    report.odd_girth = odd_girth(g).girth;
    report.theta_complement = solve_theta(complement(g), tol).bracket();
    report.holds = true;
    for (std::size_t odd = 1; odd <= g_cap && report.odd_girth.exceeds(odd); odd += 2) {
        GirthBoundReport row;
        row.n = n;
        row.g = odd;
        row.epsilon = epsilon_ng(n, odd);
        row.girth_bound = 2.0 + row.epsilon;
        row.alon_kahale = alon_kahale_bound(n, odd);
        row.theta_bracket = report.theta_complement;
        row.slack = 3.0 * tol + 4.0 * kUlp * row.girth_bound;
        row.holds = row.theta_bracket.upper <= row.girth_bound + row.slack;
        report.holds = report.holds && row.holds;
        report.rows.push_back(row);
    }
    return report;
}

double cycle_theta_exact(std::size_t g) {
    if (g < 3) throw InvalidArgument("cycle_theta_exact needs an odd g >= 3");
    require_odd(g);
    return 1.0 + 1.0 / std::cos(std::numbers::pi / static_cast<double>(g));
}

double cycle_theta_asymptotic(std::size_t g) {
    const double gd = static_cast<double>(g);
    return 2.0 + std::numbers::pi * std::numbers::pi / (2.0 * gd * gd);
}

double cycle_theta_exact_direct(std::size_t g) {
    if (g < 3) throw InvalidArgument("cycle_theta_exact_direct needs an odd g >= 3");
    require_odd(g);
    const double c = std::cos(std::numbers::pi / static_cast<double>(g));
    return static_cast<double>(g) * c / (1.0 + c);
}

VertexTransitiveReport vertex_transitive_product_check(const Graph& g, double tol) {
    const auto n = g.vertex_count();
    if (n > kMaxVertexTransitiveCheck) throw InvalidArgument("vertex_transitive_product_check supports n <= 32");
    for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) != g.degree(0)) throw InvalidArgument("graph is not regular, so not vertex-transitive");
    }
    VertexTransitiveReport r;
    r.n = n;
    r.theta = solve_theta(g, tol).bracket();
    r.theta_complement = solve_theta(complement(g), tol).bracket();
    r.product = {r.theta.lower * r.theta_complement.lower, r.theta.upper * r.theta_complement.upper};
    r.slack = 3.0 * tol * (r.theta.upper + r.theta_complement.upper + 1.0);
    r.holds = r.product.contains(static_cast<double>(n), r.slack);
    return r;
}

// ---------------------------------------------------------------------------
// The g-bound chain

RamseyBoundInputs RamseyBoundInputs::from_delta(std::size_t k, double delta) {
    if (k < 1 || k > 52) throw InvalidArgument("k must be in [1, 52]");
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("delta must lie in (0, 1]");
    const double n = (1.0 + delta) * std::ldexp(1.0, static_cast<int>(k));
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-9 * n) throw InvalidArgument("(1 + delta) 2^k is not an integer");
    return RamseyBoundInputs(k, delta, static_cast<std::size_t>(rounded));
}

RamseyBoundInputs RamseyBoundInputs::from_vertices(std::size_t k, std::size_t n) {
    if (k < 1 || k > 52) throw InvalidArgument("k must be in [1, 52]");
    const double pow2 = std::ldexp(1.0, static_cast<int>(k));
    const double delta = static_cast<double>(n) / pow2 - 1.0;
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("n must satisfy 2^k < n <= 2^(k+1)");
    return RamseyBoundInputs(k, delta, n);
}

namespace {

// (1 + delta) 2^k <= (2 + epsilon_{n,g})^k, compared in logarithms
bool product_argument_allows(const RamseyBoundInputs& in, std::size_t g) {
    const long double k = static_cast<long double>(in.k());
    const long double lhs = std::log(1.0L + static_cast<long double>(in.delta())) + k * std::log(2.0L);
    const long double rhs = k * std::log(2.0L + epsilon_ld(in.n(), g));
    return lhs <= rhs;
}

ChainStep step(std::string name, long double lhs, long double rhs) {
    ChainStep s;
    s.name = std::move(name);
    s.lhs = static_cast<double>(lhs);
    s.rhs = static_cast<double>(rhs);
    s.holds = lhs <= rhs * (1.0L + 1e-12L) + 1e-12L;
    return s;
}

} // namespace

GBoundDerivation derive_g_bound(const RamseyBoundInputs& in) {
    GBoundDerivation d;
    d.k = in.k();
    d.delta = in.delta();
    d.n = in.n();
    const long double k = static_cast<long double>(in.k());
    const long double delta = static_cast<long double>(in.delta());
    const long double n = static_cast<long double>(in.n());
    d.g_bound = static_cast<double>(4.0L * std::pow(k, 1.5L) / std::sqrt(delta));

    // largest odd g the product argument cannot refute; the premise is monotone in g
    std::size_t lo = 1;  // epsilon_{n,1} is huge, so g = 1 always survives
    std::size_t hi = 3;
    while (product_argument_allows(in, hi)) {
        lo = hi;
        hi = 2 * hi + 1;
    }
    while (hi - lo > 2) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (mid % 2 == 0) ++mid;
        if (mid >= hi) mid = hi - 2;
        if (product_argument_allows(in, mid)) lo = mid;
        else hi = mid;
    }
    const std::size_t g = lo;
    const long double gl = static_cast<long double>(g);
    const long double eps = epsilon_ld(in.n(), g);
    d.largest_unrefuted_g = g;
    d.epsilon_at_g = static_cast<double>(eps);
    d.delta_over_k = static_cast<double>(delta / k);
    const long double root_gap = std::sqrt(2.0L * delta / k);
    const long double log2_step = std::sqrt(delta / (2.0L * k));
    d.root_gap = static_cast<double>(root_gap);
    d.log2_step = static_cast<double>(log2_step);

    d.chain.push_back(step("1 + delta <= (1 + eps/2)^k", 1.0L + delta, std::pow(1.0L + eps / 2.0L, k)));
    d.chain.push_back(step("(1 + eps/2)^k <= exp(k eps / 2)", std::pow(1.0L + eps / 2.0L, k), std::exp(k * eps / 2.0L)));
    d.chain.push_back(step("exp(delta/2) <= 1 + delta", std::exp(delta / 2.0L), 1.0L + delta));
    d.chain.push_back(step("delta <= k eps", delta, k * eps));
    d.chain.push_back(step("sqrt(2 delta / k) <= (2n - 2)^(1/g) - 1", root_gap, root(2.0L * n - 2.0L, g) - 1.0L));
    d.chain.push_back(step("2^sqrt(delta / 2k) <= 1 + sqrt(2 delta / k)", std::pow(2.0L, log2_step), 1.0L + root_gap));
    d.chain.push_back(step("2^(g sqrt(delta / 2k)) <= 2n - 2", std::pow(2.0L, gl * log2_step), 2.0L * n - 2.0L));
    d.chain.push_back(step("2n - 2 <= 2^(2k)", 2.0L * n - 2.0L, std::pow(2.0L, 2.0L * k)));
    d.chain.push_back(step("g sqrt(delta / 2k) <= 2k", gl * log2_step, 2.0L * k));
    d.chain.push_back(step("g <= 4 k^(3/2) delta^(-1/2)", gl, static_cast<long double>(d.g_bound)));
    d.chain_holds = std::all_of(d.chain.begin(), d.chain.end(), [](const ChainStep& s) { return s.holds; });
    return d;
}

std::vector<InequalityAudit> elementary_inequality_audit(std::size_t points) {
    if (points < 1) throw InvalidArgument("audit needs at least one grid point");
    std::vector<InequalityAudit> out;
    auto sweep = [&](std::string name, long double from, long double to, bool include_from, auto lhs, auto rhs) {
        InequalityAudit a;
        a.name = std::move(name);
        a.min_margin = std::numeric_limits<double>::infinity();
        const std::size_t first = include_from ? 0 : 1;
        for (std::size_t i = first; i <= points; ++i) {
            const long double x = from + (to - from) * static_cast<long double>(i) / static_cast<long double>(points);
            const long double margin = rhs(x) - lhs(x);
            if (margin < a.min_margin) {
                a.min_margin = static_cast<double>(margin);
                a.argmin = static_cast<double>(x);
            }
            ++a.points;
        }
        a.holds = a.min_margin >= 0.0;
        out.push_back(std::move(a));
    };
    sweep("exp(delta/2) <= 1 + delta, delta in (0, 1]", 0.0L, 1.0L, false,
          [](long double d) { return std::exp(d / 2.0L); }, [](long double d) { return 1.0L + d; });
    sweep("2^(x/2) <= 1 + x, x in [0, 2]", 0.0L, 2.0L, true,
          [](long double x) { return std::pow(2.0L, x / 2.0L); }, [](long double x) { return 1.0L + x; });
    return out;
}

std::vector<double> power_traces(const SymmetricMatrix& b, std::size_t max_power) {
    const auto base = detail::Dense::from(b);
    std::vector<double> out;
    detail::Dense p = base;
    for (std::size_t l = 1; l <= max_power; ++l) {
        if (l > 1) p = detail::multiply(p, base);
        out.push_back(p.trace());
    }
    return out;
}

GirthLemmaTrace girth_lemma_trace(const Graph& g, const SymmetricMatrix& gram, std::size_t odd_g) {
    require_odd(odd_g);
    const auto n = g.vertex_count();
    if (n < 2) throw InvalidArgument("girth_lemma_trace needs n >= 2");
    if (gram.dim() != n) throw InvalidArgument("Gram matrix dimension does not match the graph");
    if (!odd_girth(g).girth.exceeds(odd_g)) {
        throw InvalidArgument("graph has an odd cycle of length <= " + std::to_string(odd_g));
    }
    for (Vertex i = 0; i < n; ++i) {
        if (std::abs(gram(i, i) - 1.0) > 1e-9) throw InvalidArgument("Gram matrix must have unit diagonal");
        for (Vertex j = 0; j < i; ++j) {
            if (!g.adjacent(i, j) && std::abs(gram(i, j)) > 1e-9) {
                throw InvalidArgument("Gram matrix is not zero on the non-edges of the graph");
            }
        }
    }
    if (lambda_min(gram) < -1e-9) throw InvalidArgument("Gram matrix is not positive semidefinite");

    GirthLemmaTrace t;
    t.n = n;
    t.g = odd_g;
    SymmetricMatrix b = gram;
    for (std::size_t i = 0; i < n; ++i) b.set(i, i, 0.0);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < i; ++j)
            if (!g.adjacent(i, j)) b.set(i, j, 0.0);

    t.mu = eigenvalues(b);
    const double rho = std::max(std::abs(t.mu.front()), std::abs(t.mu.back()));
    const auto traces = power_traces(b, odd_g);
    for (std::size_t l = 1; l <= odd_g; l += 2) {
        t.odd_traces.push_back(traces[l - 1]);
        t.max_odd_trace = std::max(t.max_odd_trace, std::abs(traces[l - 1]));
    }
    const double trace_tol = 1e-9 * static_cast<double>(n) * std::max(1.0, std::pow(rho, static_cast<double>(odd_g)));

    const ChebDegree deg(odd_g);
    double magnitude = 0.0;
    for (double m : t.mu) {
        const double v = cheb_eval_recurrence(deg, m);
        t.chebyshev_sum += v;
        magnitude += std::abs(v);
    }
    const double mu1 = t.mu.front();
    t.t_mu1 = cheb_eval_recurrence(deg, mu1);
    if (mu1 >= 1.0) t.t_mu1_lower = cheb_lower_bound(deg, mu1);
    const long double r = root(2.0L * static_cast<long double>(n) - 2.0L, odd_g) - 1.0L;
    t.mu1_sqrt_bound = static_cast<double>(std::sqrt(1.0L + r * r));
    t.lambda1 = mu1 + 1.0;
    t.bound = girth_theta_bound(n, odd_g);

    const double slack = 1e-9 * std::max(1.0, magnitude);
    t.holds = t.max_odd_trace <= trace_tol && std::abs(t.chebyshev_sum) <= slack &&
              t.t_mu1 <= static_cast<double>(n - 1) + slack &&
              (mu1 < 1.0 || (t.t_mu1_lower <= t.t_mu1 + slack && mu1 <= t.mu1_sqrt_bound + 1e-9)) &&
              t.mu1_sqrt_bound <= t.bound - 1.0 + 1e-12 && t.lambda1 <= t.bound + 1e-9;
    return t;
}

} // namespace thetalab
