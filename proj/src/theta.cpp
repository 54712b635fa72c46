#include "thetalab/theta.hpp"

#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <tuple>

namespace thetalab {

namespace {

using detail::Dense;

// Primal:  max <J, X>  s.t.  tr X = 1,  2 X_ij = 0 for ij in E,  X psd.
// Dual:    min y_0     s.t.  Z = y_0 I + sum_e y_e E_e - J psd,  E_e = e_i e_j^T + e_j e_i^T.
// Primal-dual path following with the HKM direction and a Mehrotra corrector.
// Both iterates stay exactly feasible for their affine constraints, so the
// gap y_0 - <J, X> is X . Z.
class ThetaSolver {
public:
    ThetaSolver(const Graph& g, const ThetaOptions& opt) : g_(g), opt_(opt), n_(g.vertex_count()), edges_(g.edges()) {}

    ThetaResult run();

private:
    Dense dual_slack() const;
    Dense schur(const Dense& w, const Dense& x) const;
    std::vector<double> apply_constraints(const Dense& k) const;
    Dense dual_direction(const std::vector<double>& dy) const;
    void project_primal_direction(Dense& dx) const;
    double max_step(const Dense& s, const Dense& ds) const;
    ThetaResult certify(std::size_t iterations) const;

    const Graph& g_;
    ThetaOptions opt_;
    std::size_t n_;
    std::vector<Edge> edges_;
    Dense x_;
    std::vector<double> y_;  // y_[0] = trace multiplier, y_[1 + e] for edge e
};

Dense ThetaSolver::dual_slack() const {
    Dense z(n_, -1.0);
    for (std::size_t i = 0; i < n_; ++i) z(i, i) += y_[0];
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        z(i, j) += y_[1 + e];
        z(j, i) += y_[1 + e];
    }
    return z;
}

// M_pq = tr(A_p W A_q X)
Dense ThetaSolver::schur(const Dense& w, const Dense& x) const {
    const auto m = edges_.size() + 1;
    Dense mat(m);
    mat(0, 0) = inner(w, x);
    const Dense wx = multiply(w, x);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        const double v = wx(i, j) + wx(j, i);
        mat(0, 1 + e) = v;
        mat(1 + e, 0) = v;
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        for (std::size_t f = 0; f <= e; ++f) {
            auto [k, l] = edges_[f];
            const double v = w(j, k) * x(l, i) + w(j, l) * x(k, i) + w(i, k) * x(l, j) + w(i, l) * x(k, j);
            mat(1 + e, 1 + f) = v;
            mat(1 + f, 1 + e) = v;
        }
    }
    return mat;
}

std::vector<double> ThetaSolver::apply_constraints(const Dense& k) const {
    std::vector<double> out(edges_.size() + 1);
    out[0] = k.trace();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        out[1 + e] = k(i, j) + k(j, i);
    }
    return out;
}

Dense ThetaSolver::dual_direction(const std::vector<double>& dy) const {
    Dense dz(n_);
    for (std::size_t i = 0; i < n_; ++i) dz(i, i) = dy[0];
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        dz(i, j) = dy[1 + e];
        dz(j, i) = dy[1 + e];
    }
    return dz;
}

// Orthogonal projection onto {tr dX = 0, dX_ij = 0 on edges}; removes the
// residual left by an inexact Schur solve.
void ThetaSolver::project_primal_direction(Dense& dx) const {
    for (auto [i, j] : edges_) {
        dx(i, j) = 0.0;
        dx(j, i) = 0.0;
    }
    const double shift = dx.trace() / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) dx(i, i) -= shift;
}

// Largest alpha with S + alpha dS psd (S positive definite).
double ThetaSolver::max_step(const Dense& s, const Dense& ds) const {
    auto l = detail::cholesky(s);
    if (!l) return 0.0;
    const Dense scaled = detail::congruence(detail::lower_inverse(*l), ds);
    const double lmin = detail::dense_eigenvalues(scaled).back();
    return lmin >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

ThetaResult ThetaSolver::certify(std::size_t iterations) const {
    ThetaResult r;
    r.n = n_;
    r.iterations = iterations;

    Dense x = x_;
    for (auto [i, j] : edges_) x(i, j) = x(j, i) = 0.0;
    x.symmetrize();
    x.scale(1.0 / x.trace());
    const double lmin = detail::dense_eigenvalues(x).back();
    if (lmin < 0.0) {
        // (X + t I) / (1 + n t) is feasible and psd for t >= -lambda_min
        const double t = -lmin * (1.0 + 1e-6) + std::numeric_limits<double>::min();
        for (std::size_t i = 0; i < n_; ++i) x(i, i) += t;
        x.scale(1.0 / (1.0 + static_cast<double>(n_) * t));
    }
    r.primal_X = x.to_symmetric();
    r.lower = r.primal_X.sum();

    SymmetricMatrix d = SymmetricMatrix::ones(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [i, j] = edges_[e];
        d.set(i, j, 1.0 - y_[1 + e]);
    }
    r.dual_certificate = std::move(d);
    r.upper = lambda_max(r.dual_certificate);
    return r;
}

ThetaResult ThetaSolver::run() {
    const auto nd = static_cast<double>(n_);
    x_ = Dense::identity(n_);
    x_.scale(1.0 / nd);
    y_.assign(edges_.size() + 1, 0.0);
    y_[0] = nd + 1.0;

    double target = 0.1 * opt_.tol;
    std::optional<ThetaResult> best;
    std::size_t iter = 0;
    for (; iter < opt_.max_iterations; ++iter) {
        const Dense z = dual_slack();
        const double primal = x_.sum();
        const double dual = y_[0];
        if (dual - primal <= target) {
            auto r = certify(iter);
            if (!best || r.gap() < best->gap()) best = r;
            if (r.gap() <= opt_.tol) return r;
            target *= 0.1;
            if (target < 1e-15 * (1.0 + std::abs(dual))) break;
        }

        auto lz = detail::cholesky(z);
        if (!lz) break;
        const Dense w = detail::spd_inverse(*lz);
        const double mu = inner(x_, z) / nd;

        Dense m = schur(w, x_);
        std::optional<Dense> lm;
        for (double reg = 0.0; !(lm = detail::cholesky(m)); reg = reg == 0.0 ? 1e-14 : reg * 100.0) {
            if (reg > 1e-6) break;
            for (std::size_t p = 0; p < m.dim(); ++p) m(p, p) *= 1.0 + reg;
        }
        if (!lm) break;

        const std::vector<double> a_w = apply_constraints(w);
        auto direction = [&](double sigma_mu, const Dense* correction) {
            std::vector<double> rhs(a_w.size());
            for (std::size_t p = 0; p < rhs.size(); ++p) rhs[p] = sigma_mu * a_w[p];
            rhs[0] -= 1.0;
            if (correction) {
                const auto ac = apply_constraints(*correction);
                for (std::size_t p = 0; p < rhs.size(); ++p) rhs[p] -= ac[p];
            }
            detail::cholesky_solve(*lm, rhs);
            Dense dz = dual_direction(rhs);
            // dX = sigma mu W - X - sym(W dZ X) - sym(correction)
            Dense dx = multiply(multiply(w, dz), x_);
            dx.scale(-1.0);
            if (correction) dx.axpy(-1.0, *correction);
            dx.symmetrize();
            dx.axpy(sigma_mu, w);
            dx.axpy(-1.0, x_);
            project_primal_direction(dx);
            return std::tuple{std::move(dx), std::move(dz), std::move(rhs)};
        };

        // predictor
        auto [dx_a, dz_a, dy_a] = direction(0.0, nullptr);
        const double ap_a = std::min(1.0, max_step(x_, dx_a));
        const double ad_a = std::min(1.0, max_step(z, dz_a));
        Dense x_next = x_;
        x_next.axpy(ap_a, dx_a);
        Dense z_next = z;
        z_next.axpy(ad_a, dz_a);
        const double ratio = std::max(0.0, inner(x_next, z_next)) / (mu * nd);
        const double sigma = std::clamp(ratio * ratio * ratio, 0.0, 1.0);

        // corrector
        const Dense correction = multiply(multiply(dx_a, dz_a), w);
        auto [dx, dz, dy] = direction(sigma * mu, &correction);
        const double ap = std::min(1.0, 0.98 * max_step(x_, dx));
        const double ad = std::min(1.0, 0.98 * max_step(z, dz));
        if (ap <= 0.0 && ad <= 0.0) break;

        x_.axpy(ap, dx);
        x_.symmetrize();
        for (std::size_t p = 0; p < y_.size(); ++p) y_[p] += ad * dy[p];
    }

    auto r = certify(iter);
    if (!best || r.gap() < best->gap()) best = r;
    if (best->gap() <= opt_.tol) return *best;
    throw ThetaIterationLimit("theta solver stopped after " + std::to_string(iter) + " iterations with gap " +
                                  std::to_string(best->gap()) + " > tol " + std::to_string(opt_.tol),
                              *best);
}

} // namespace

ThetaResult solve_theta(const Graph& g, const ThetaOptions& options) {
    const auto n = g.vertex_count();
    if (n > kMaxThetaVertices) {
        throw InvalidArgument("solve_theta supports at most " + std::to_string(kMaxThetaVertices) + " vertices");
    }
    if (!(options.tol >= kMinTolerance)) throw InvalidArgument("tolerance must be at least 1e-9");

    ThetaResult r;
    if (n == 1) {
        r.n = 1;
        r.lower = r.upper = 1.0;
        r.primal_X = SymmetricMatrix::identity(1);
        r.dual_certificate = SymmetricMatrix::ones(1);
    } else {
        r = ThetaSolver(g, options).run();
    }
    const auto check = check_certificates(g, r);
    if (!check.ok()) {
        throw Error("theta certificates failed re-validation (trace error " + std::to_string(check.trace_error) +
                    ", min eigenvalue " + std::to_string(check.primal_min_eigenvalue) + ")");
    }
    return r;
}

ThetaResult solve_theta(const Graph& g, double tol) {
    ThetaOptions opt;
    opt.tol = tol;
    return solve_theta(g, opt);
}

CertificateCheck check_certificates(const Graph& g, const ThetaResult& result) {
    CertificateCheck c;
    const auto n = g.vertex_count();
    const auto& x = result.primal_X;
    const auto& d = result.dual_certificate;
    if (x.dim() != n || d.dim() != n) return c;

    c.trace_error = std::abs(x.trace() - 1.0);
    for (auto [i, j] : g.edges()) c.edge_violation = std::max(c.edge_violation, std::abs(x(i, j)));
    c.primal_min_eigenvalue = lambda_min(x);
    c.objective = x.sum();
    c.primal_feasible = c.trace_error <= 1e-12 * static_cast<double>(n) && c.edge_violation == 0.0 &&
                        c.primal_min_eigenvalue >= -1e-8;

    c.dual_pattern = true;
    for (std::size_t i = 0; i < n && c.dual_pattern; ++i) {
        if (d(i, i) != 1.0) c.dual_pattern = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (!g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) && d(i, j) != 1.0) {
                c.dual_pattern = false;
                break;
            }
        }
    }
    c.dual_lambda1 = lambda_max(d);
    c.reproduces_bracket = std::abs(c.objective - result.lower) <= 1e-8 &&
                           std::abs(c.dual_lambda1 - result.upper) <= 1e-8 && result.lower <= result.upper + 1e-12;
    return c;
}

// ---------------------------------------------------------------------------
// Orthonormal representations

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

void require_unit(std::span<const double> v, const std::string& what) {
    const double norm = std::sqrt(dot(v, v));
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
        throw InvalidArgument(what + " is not a unit vector (norm " + std::to_string(norm) + ")");
    }
}

} // namespace

OrthonormalRepresentation::OrthonormalRepresentation(std::size_t dim, std::vector<std::vector<double>> vectors,
                                                     std::optional<std::vector<double>> handle)
    : dim_(dim), size_(vectors.size()), handle_(std::move(handle)) {
    if (dim_ == 0) throw InvalidArgument("representation dimension must be positive");
    data_.reserve(dim_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
        if (vectors[i].size() != dim_) throw InvalidArgument("vector " + std::to_string(i) + " has the wrong dimension");
        require_unit(vectors[i], "vector " + std::to_string(i));
        data_.insert(data_.end(), vectors[i].begin(), vectors[i].end());
    }
    if (handle_) {
        if (handle_->size() != dim_) throw InvalidArgument("handle has the wrong dimension");
        require_unit(*handle_, "handle");
    }
}

std::span<const double> OrthonormalRepresentation::vector(std::size_t i) const {
    if (i >= size_) throw InvalidArgument("representation vector index out of range");
    return {data_.data() + i * dim_, dim_};
}

std::span<const double> OrthonormalRepresentation::handle() const {
    if (!handle_) throw InvalidArgument("representation has no handle");
    return *handle_;
}

RepresentationReport validate_representation(const Graph& g, const OrthonormalRepresentation& u) {
    if (u.size() != g.vertex_count()) {
        throw InvalidArgument("representation has " + std::to_string(u.size()) + " vectors for a graph on " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    RepresentationReport r;
    for (Vertex i = 0; i < u.size(); ++i) {
        const double err = std::abs(std::sqrt(dot(u.vector(i), u.vector(i))) - 1.0);
        if (err > r.worst_norm_error) {
            r.worst_norm_error = err;
            r.worst_norm_vertex = i;
        }
        for (Vertex j = i + 1; j < u.size(); ++j) {
            if (g.adjacent(i, j)) continue;
            const double v = std::abs(dot(u.vector(i), u.vector(j)));
            if (!r.worst_pair || v > r.worst_orthogonality) {
                r.worst_orthogonality = v;
                r.worst_pair = Edge{i, j};
            }
        }
    }
    r.valid = r.worst_norm_error <= kRepresentationTolerance && r.worst_orthogonality <= kRepresentationTolerance;
    if (r.valid) r.worst_pair.reset();
    return r;
}

double handle_value(const OrthonormalRepresentation& u) {
    const auto c = u.handle();
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double p = dot(c, u.vector(i));
        if (p == 0.0) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, 1.0 / (p * p));
    }
    return worst;
}

SymmetricMatrix gram_matrix(const OrthonormalRepresentation& u) {
    SymmetricMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) m.set(i, j, dot(u.vector(i), u.vector(j)));
    if (u.size() > 0 && lambda_min(m) < -1e-9) throw Error("Gram matrix is not positive semidefinite");
    return m;
}

double gram_lambda1_lower_bound(const Graph& g, const OrthonormalRepresentation& u) {
    const auto report = validate_representation(g, u);
    if (!report.valid) throw InvalidArgument("not an orthonormal representation of the graph");
    return lambda_max(gram_matrix(u));
}

OrthonormalRepresentation tensor_representation(const OrthonormalRepresentation& a,
                                                const OrthonormalRepresentation& b) {
    if (a.size() != b.size()) throw InvalidArgument("representations have different vertex counts");
    auto kron = [](std::span<const double> x, std::span<const double> y) {
        std::vector<double> out;
        out.reserve(x.size() * y.size());
        for (double xi : x)
            for (double yj : y) out.push_back(xi * yj);
        return out;
    };
    std::vector<std::vector<double>> vectors;
    for (std::size_t i = 0; i < a.size(); ++i) vectors.push_back(kron(a.vector(i), b.vector(i)));
    std::optional<std::vector<double>> handle;
    if (a.has_handle() && b.has_handle()) handle = kron(a.handle(), b.handle());
    return OrthonormalRepresentation(a.dim() * b.dim(), std::move(vectors), std::move(handle));
}

SubmultiplicativityReport verify_submultiplicativity(const Graph& a, const Graph& b, double tol) {
    if (a.vertex_count() != b.vertex_count()) throw InvalidArgument("graphs have different vertex counts");
    if (a.vertex_count() > kMaxSubmultiplicativityVertices) {
        throw InvalidArgument("verify_submultiplicativity supports at most 64 vertices");
    }
    SubmultiplicativityReport r;
    r.intersection = solve_theta(edge_intersection(a, b), tol).bracket();
    r.first = solve_theta(a, tol).bracket();
    r.second = solve_theta(b, tol).bracket();
    r.slack = 3.0 * tol * (r.first.upper + r.second.upper + 1.0);
    r.holds = r.intersection.upper <= r.first.lower * r.second.lower + r.slack;
    return r;
}

SubmultiplicativityReport verify_edge_union_bound(const Graph& a, const Graph& b, double tol) {
    return verify_submultiplicativity(complement(a), complement(b), tol);
}

} // namespace thetalab
