#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace thetalab {

/// Degree of a Chebyshev polynomial of the first kind; always >= 1.
class ChebDegree {
public:
    explicit ChebDegree(std::size_t g);

    std::size_t value() const noexcept { return g_; }
    bool odd() const noexcept { return g_ % 2 == 1; }

private:
    std::size_t g_;
};

// Exact integer coefficients need 77 bits at degree 63.
using ChebCoefficient = __int128;
inline constexpr std::size_t kMaxExactChebDegree = 63;

// Three-term recurrence in long double. Any finite x.
double cheb_eval_recurrence(ChebDegree g, double x);

// Closed form for x >= 1; the small branch uses 1/(x + sqrt(x^2 - 1)) away from x = 1.
double cheb_eval_closed(ChebDegree g, double x);

// Monomial coefficients c[0..g] of T_g, for g <= 63.
std::vector<ChebCoefficient> cheb_coefficients(ChebDegree g);

// Horner evaluation of an integer coefficient list in double precision.
double cheb_eval_coefficients(const std::vector<ChebCoefficient>& coefficients, double x);

// (1 + sqrt(x^2 - 1))^g / 2, a lower bound for T_g(x) when g is odd and x >= 1.
double cheb_lower_bound(ChebDegree g, double x);

std::string to_string(ChebCoefficient c);

} // namespace thetalab
