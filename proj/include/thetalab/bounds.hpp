#pragma once

#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/theta.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace thetalab {

inline constexpr std::size_t kDefaultGirthCap = 99;
inline constexpr std::size_t kMaxGirthCheckVertices = 64;

// (1/2) ((2n - 2)^(1/g) - 1)^2, the excess over 2 in the odd-girth bound.
double epsilon_ng(std::size_t n, std::size_t g);
// 2 + epsilon_ng(n, g)
double girth_theta_bound(std::size_t n, std::size_t g);
// 1 + (n - 1)^(1/g), kept for comparison only.
double alon_kahale_bound(std::size_t n, std::size_t g);

struct GirthBoundReport {
    std::size_t n = 0;
    std::size_t g = 0;
    double epsilon = 0.0;
    double girth_bound = 0.0;   // 2 + epsilon
    double alon_kahale = 0.0;   // 1 + (n - 1)^(1/g)
    Interval theta_bracket;     // theta of the complement
    double slack = 0.0;
    bool holds = false;         // theta_bracket.upper <= girth_bound + slack
};

struct GirthCheckReport {
    std::size_t n = 0;
    OddGirth odd_girth;
    Interval theta_complement;
    std::vector<GirthBoundReport> rows;  // one per odd g below the odd girth, up to the cap
    bool holds = false;
};

// Solves theta of the complement once, then tests 2 + epsilon_{n,g} for every
// odd g < odd_girth(G) with g <= g_cap.
GirthCheckReport girth_theta_bound_check(const Graph& g, double tol = kDefaultTolerance,
                                         std::size_t g_cap = kDefaultGirthCap);

// 1 + sec(pi / g): theta of the complement of the odd cycle C_g.
double cycle_theta_exact(std::size_t g);
// 2 + pi^2 / (2 g^2)
double cycle_theta_asymptotic(std::size_t g);
// g cos(pi/g) / (1 + cos(pi/g)): theta of the odd cycle C_g itself.
double cycle_theta_exact_direct(std::size_t g);

struct VertexTransitiveReport {
    std::size_t n = 0;
    Interval theta;
    Interval theta_complement;
    Interval product;
    double slack = 0.0;
    bool holds = false;  // product interval (widened by slack) contains n
};

inline constexpr std::size_t kMaxVertexTransitiveCheck = 32;

// Requires a regular graph (a necessary condition for vertex transitivity) with n <= 32.
VertexTransitiveReport vertex_transitive_product_check(const Graph& g, double tol = kDefaultTolerance);

/// k colours, delta in (0, 1], n = (1 + delta) 2^k an integer.
class RamseyBoundInputs {
public:
    static RamseyBoundInputs from_delta(std::size_t k, double delta);
    static RamseyBoundInputs from_vertices(std::size_t k, std::size_t n);

    std::size_t k() const noexcept { return k_; }
    double delta() const noexcept { return delta_; }
    std::size_t n() const noexcept { return n_; }

private:
    RamseyBoundInputs(std::size_t k, double delta, std::size_t n) : k_(k), delta_(delta), n_(n) {}

    std::size_t k_;
    double delta_;
    std::size_t n_;
};

struct ChainStep {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;  // lhs <= rhs (up to rounding)
};

struct GBoundDerivation {
    std::size_t k = 0;
    double delta = 0.0;
    std::size_t n = 0;
    double g_bound = 0.0;           // 4 k^(3/2) delta^(-1/2)
    // Largest odd g with (1 + delta) 2^k <= (2 + epsilon_{n,g})^k, i.e. the largest
    // odd girth threshold the product argument cannot rule out.
    std::size_t largest_unrefuted_g = 0;
    double epsilon_at_g = 0.0;
    double delta_over_k = 0.0;      // lower bound forced on epsilon
    double root_gap = 0.0;          // sqrt(2 delta / k)
    double log2_step = 0.0;         // sqrt(delta / 2k)
    std::vector<ChainStep> chain;   // every step evaluated at g = largest_unrefuted_g
    bool chain_holds = false;
};

GBoundDerivation derive_g_bound(const RamseyBoundInputs& inputs);

struct InequalityAudit {
    std::string name;
    std::size_t points = 0;
    double min_margin = 0.0;   // min over the grid of rhs - lhs
    double argmin = 0.0;
    bool holds = false;
};

// exp(delta/2) <= 1 + delta on (0, 1] and 2^(x/2) <= 1 + x on [0, 2].
std::vector<InequalityAudit> elementary_inequality_audit(std::size_t points = 100000);

// trace(B^l) for l = 1..max_power
std::vector<double> power_traces(const SymmetricMatrix& b, std::size_t max_power);

/**
 * Replays the odd-girth argument on one Gram matrix M of an orthonormal
 * representation of G, where G has no odd cycle of length <= g.
 */
struct GirthLemmaTrace {
    std::size_t n = 0;
    std::size_t g = 0;
    std::vector<double> odd_traces;       // trace(B^l), l = 1, 3, ..., g
    double max_odd_trace = 0.0;
    std::vector<double> mu;               // eigenvalues of B = M - I, descending
    double chebyshev_sum = 0.0;           // sum_i T_g(mu_i)
    double t_mu1 = 0.0;                   // T_g(mu_1)
    double t_mu1_lower = 0.0;             // (1 + sqrt(mu_1^2 - 1))^g / 2 when mu_1 >= 1
    double mu1_sqrt_bound = 0.0;          // sqrt(1 + ((2n - 2)^(1/g) - 1)^2)
    double lambda1 = 0.0;                 // mu_1 + 1
    double bound = 0.0;                   // 2 + epsilon_{n,g}
    bool holds = false;
};

GirthLemmaTrace girth_lemma_trace(const Graph& g, const SymmetricMatrix& gram, std::size_t odd_g);

} // namespace thetalab
