#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace thetalab {

/// Dense real symmetric matrix; only the lower triangle is stored (row-major packed).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n, double fill = 0.0);

    static SymmetricMatrix identity(std::size_t n);
    static SymmetricMatrix ones(std::size_t n);
    // Reads the lower triangle of a row-major n x n array; rejects asymmetric input
    // (|a_ij - a_ji| > symmetry_tol) and non-finite entries.
    static SymmetricMatrix from_dense(std::size_t n, std::span<const double> values, double symmetry_tol = 0.0);

    std::size_t dim() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double value);

    double trace() const;
    double sum() const;
    double frobenius_norm() const;
    std::vector<double> to_dense() const;

    bool operator==(const SymmetricMatrix&) const = default;

private:
    static std::size_t index(std::size_t i, std::size_t j) noexcept {
        return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
    }

    std::size_t n_ = 0;
    std::vector<double> data_;
};

// Eigenpairs sorted by eigenvalue, descending. vectors holds eigenvector k in
// column k of a row-major n x n array (empty when vectors were not requested).
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;
    std::size_t sweeps = 0;

    std::vector<double> vector(std::size_t k) const;
};

inline constexpr std::size_t kMaxEigenDimension = 4096;
inline constexpr std::size_t kJacobiSweepCap = 100;

// Cyclic Jacobi rotations. Throws ConvergenceError if the off-diagonal mass has
// not dropped below 1e-12 * ||A||_F after the sweep cap.
EigenDecomposition eig_symmetric(const SymmetricMatrix& a, bool want_vectors = true);
std::vector<double> eigenvalues(const SymmetricMatrix& a);
double lambda_max(const SymmetricMatrix& a);
double lambda_min(const SymmetricMatrix& a);

// Whitespace-separated dense text, one row per line.
void write_matrix(std::ostream& out, const SymmetricMatrix& m);
SymmetricMatrix read_matrix(std::istream& in);

} // namespace thetalab
