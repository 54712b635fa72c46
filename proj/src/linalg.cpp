#include "thetalab/linalg.hpp"

#include "thetalab/error.hpp"
#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace thetalab {

SymmetricMatrix::SymmetricMatrix(std::size_t n, double fill) : n_(n), data_(n * (n + 1) / 2, fill) {
    if (!std::isfinite(fill)) throw InvalidArgument("matrix entries must be finite");
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymmetricMatrix SymmetricMatrix::ones(std::size_t n) { return SymmetricMatrix(n, 1.0); }

SymmetricMatrix SymmetricMatrix::from_dense(std::size_t n, std::span<const double> values, double symmetry_tol) {
    if (values.size() != n * n) throw InvalidArgument("dense matrix has the wrong number of entries");
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double lo = values[i * n + j];
            const double up = values[j * n + i];
            if (std::abs(lo - up) > symmetry_tol) {
                throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ")");
            }
            m.set(i, j, lo);
        }
    return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_) throw InvalidArgument("matrix index out of range");
    if (!std::isfinite(value)) throw InvalidArgument("matrix entries must be finite");
    data_[index(i, j)] = value;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::sum() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        s += (*this)(i, i);
        for (std::size_t j = 0; j < i; ++j) s += 2.0 * (*this)(i, j);
    }
    return s;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        s += (*this)(i, i) * (*this)(i, i);
        for (std::size_t j = 0; j < i; ++j) s += 2.0 * (*this)(i, j) * (*this)(i, j);
    }
    return std::sqrt(s);
}

std::vector<double> SymmetricMatrix::to_dense() const {
    std::vector<double> out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = (*this)(i, j);
    return out;
}

std::vector<double> EigenDecomposition::vector(std::size_t k) const {
    const auto n = values.size();
    if (vectors.empty() || k >= n) throw InvalidArgument("eigenvector not available");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vectors[i * n + k];
    return v;
}

namespace {

double off_norm2(const detail::Dense& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < i; ++j) s += 2.0 * a(i, j) * a(i, j);
    return s;
}

EigenDecomposition jacobi(detail::Dense a, bool want_vectors) {
    const auto n = a.dim();
    if (n > kMaxEigenDimension) throw InvalidArgument("eigen decomposition limited to dimension 4096");
    detail::Dense v = want_vectors ? detail::Dense::identity(n) : detail::Dense();

    const double norm2 = inner(a, a);
    EigenDecomposition out;
    std::size_t sweep = 0;
    for (; sweep < kJacobiSweepCap; ++sweep) {
        const double off = off_norm2(a);
        if (off <= 1e-30 * norm2) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                // negligible relative to both diagonal entries: drop it
                if (sweep > 3 && std::abs(app) + 1e2 * std::abs(apq) == std::abs(app) &&
                    std::abs(aqq) + 1e2 * std::abs(apq) == std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
                if (want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = v(r, p);
                        const double vrq = v(r, q);
                        v(r, p) = vrp - s * (vrq + tau * vrp);
                        v(r, q) = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    if (off_norm2(a) > 1e-24 * norm2) {
        throw ConvergenceError("Jacobi eigensolver did not converge within " + std::to_string(kJacobiSweepCap) +
                               " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
    if (want_vectors) {
        out.vectors.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = v(i, order[k]);
    }
    out.sweeps = sweep;
    return out;
}

} // namespace

namespace detail {

std::vector<double> dense_eigenvalues(const Dense& a) { return jacobi(a, false).values; }

} // namespace detail

EigenDecomposition eig_symmetric(const SymmetricMatrix& a, bool want_vectors) {
    return jacobi(detail::Dense::from(a), want_vectors);
}

std::vector<double> eigenvalues(const SymmetricMatrix& a) { return eig_symmetric(a, false).values; }

double lambda_max(const SymmetricMatrix& a) {
    if (a.dim() == 0) throw InvalidArgument("empty matrix has no eigenvalues");
    return eigenvalues(a).front();
}

double lambda_min(const SymmetricMatrix& a) {
    if (a.dim() == 0) throw InvalidArgument("empty matrix has no eigenvalues");
    return eigenvalues(a).back();
}

void write_matrix(std::ostream& out, const SymmetricMatrix& m) {
    const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    out.precision(precision);
}

SymmetricMatrix read_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream iss(line);
        std::vector<double> row;
        double v = 0;
        while (iss >> v) row.push_back(v);
        if (!iss.eof()) throw ParseError("non-numeric matrix entry on row " + std::to_string(rows.size()));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const auto n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ParseError("matrix text is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return SymmetricMatrix::from_dense(n, flat);
}

} // namespace thetalab
