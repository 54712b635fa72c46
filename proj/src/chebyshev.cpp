#include "thetalab/chebyshev.hpp"

#include "thetalab/error.hpp"

#include <algorithm>
#include <cmath>

namespace thetalab {

ChebDegree::ChebDegree(std::size_t g) : g_(g) {
    if (g < 1) throw InvalidArgument("Chebyshev degree must be at least 1");
}

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct Compensated {
    double hi;
    double lo;
};

Compensated two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

Compensated quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

} // namespace

double cheb_eval_recurrence(ChebDegree g, double x) {
    // T_{m+1} = 2x T_m - T_{m-1}, with each iterate carried as a compensated pair.
    const double two_x = 2.0 * x;
    Compensated prev{1.0, 0.0};
    Compensated cur{x, 0.0};
    for (std::size_t m = 1; m < g.value(); ++m) {
        const double p = two_x * cur.hi;
        const double p_err = std::fma(two_x, cur.hi, -p);
        auto s = two_sum(p, -prev.hi);
        s.lo += p_err + std::fma(two_x, cur.lo, -prev.lo);
        prev = cur;
        cur = quick_two_sum(s.hi, s.lo);
    }
    return cur.hi + cur.lo;
}

double cheb_eval_closed(ChebDegree g, double x) {
    if (!(x >= 1.0)) throw InvalidArgument("closed form requires x >= 1");
    const long double lx = x;
    const long double root = std::sqrt((lx - 1.0L) * (lx + 1.0L));
    const long double big = lx + root;
    const long double small = (x >= 1.0 + 1e-8) ? 1.0L / big : lx - root;
    const auto n = static_cast<int>(g.value());
    return static_cast<double>(0.5L * (std::pow(small, n) + std::pow(big, n)));
}

std::vector<ChebCoefficient> cheb_coefficients(ChebDegree g) {
    if (g.value() > kMaxExactChebDegree) {
        throw InvalidArgument("exact Chebyshev coefficients are limited to degree " +
                              std::to_string(kMaxExactChebDegree));
    }
    std::vector<ChebCoefficient> prev{1};
    std::vector<ChebCoefficient> cur{0, 1};
    for (std::size_t m = 1; m < g.value(); ++m) {
        std::vector<ChebCoefficient> next(m + 2, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double cheb_eval_coefficients(const std::vector<ChebCoefficient>& coefficients, double x) {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

double cheb_lower_bound(ChebDegree g, double x) {
    if (!g.odd()) throw InvalidArgument("cheb_lower_bound requires an odd degree");
    if (!(x >= 1.0)) throw InvalidArgument("cheb_lower_bound requires x >= 1");
    const long double lx = x;
    const long double root = std::sqrt((lx - 1.0L) * (lx + 1.0L));
    return static_cast<double>(0.5L * std::pow(1.0L + root, static_cast<int>(g.value())));
}

std::string to_string(ChebCoefficient c) {
    if (c == 0) return "0";
    const bool negative = c < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(c + 1)) + 1 : static_cast<unsigned __int128>(c);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace thetalab
