#pragma once

// Square dense row-major matrices for solver internals.

#include "thetalab/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace thetalab::detail {

class Dense {
public:
    Dense() = default;
    explicit Dense(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    static Dense identity(std::size_t n) {
        Dense d(n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0;
        return d;
    }

    static Dense from(const SymmetricMatrix& m) {
        Dense d(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) d(i, j) = m(i, j);
        return d;
    }

    std::size_t dim() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    double* data() noexcept { return a_.data(); }
    const double* data() const noexcept { return a_.data(); }

    SymmetricMatrix to_symmetric() const {
        SymmetricMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j <= i; ++j) m.set(i, j, 0.5 * ((*this)(i, j) + (*this)(j, i)));
        return m;
    }

    void symmetrize() {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = v;
                (*this)(j, i) = v;
            }
    }

    Dense& operator+=(const Dense& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    void axpy(double alpha, const Dense& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += alpha * o.a_[k];
    }

    void scale(double alpha) {
        for (auto& v : a_) v *= alpha;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double sum() const {
        double s = 0.0;
        for (auto v : a_) s += v;
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

inline Dense multiply(const Dense& a, const Dense& b) {
    const auto n = a.dim();
    Dense c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.data() + k * n;
            double* crow = c.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    return c;
}

// <A, B> = trace(A^T B)
inline double inner(const Dense& a, const Dense& b) {
    double s = 0.0;
    const auto len = a.dim() * a.dim();
    for (std::size_t k = 0; k < len; ++k) s += a.data()[k] * b.data()[k];
    return s;
}

// Lower Cholesky factor, or nullopt if the matrix is not numerically positive definite.
inline std::optional<Dense> cholesky(const Dense& a) {
    const auto n = a.dim();
    Dense l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

// Solves L L^T x = b in place.
inline void cholesky_solve(const Dense& l, std::vector<double>& b) {
    const auto n = l.dim();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
        b[i] = s / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
        b[i] = s / l(i, i);
    }
}

// Inverse of L (lower triangular).
inline Dense lower_inverse(const Dense& l) {
    const auto n = l.dim();
    Dense inv(n);
    for (std::size_t j = 0; j < n; ++j) {
        inv(j, j) = 1.0 / l(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t k = j; k < i; ++k) s -= l(i, k) * inv(k, j);
            inv(i, j) = s / l(i, i);
        }
    }
    return inv;
}

// A^{-1} from the Cholesky factor of A: (L^{-1})^T L^{-1}.
inline Dense spd_inverse(const Dense& l) {
    const auto n = l.dim();
    const Dense li = lower_inverse(l);
    Dense out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = i; k < n; ++k) s += li(k, i) * li(k, j);
            out(i, j) = s;
            out(j, i) = s;
        }
    return out;
}

// L^{-1} A L^{-T} for symmetric A.
inline Dense congruence(const Dense& l_inv, const Dense& a) {
    const auto n = a.dim();
    Dense t = multiply(l_inv, a);
    Dense out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k <= j; ++k) s += t(i, k) * l_inv(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    return out;
}

// Eigenvalues of a dense symmetric matrix (Jacobi), descending.
std::vector<double> dense_eigenvalues(const Dense& a);

} // namespace thetalab::detail
