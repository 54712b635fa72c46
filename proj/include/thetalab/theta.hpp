#pragma once

#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace thetalab {

inline constexpr double kDefaultTolerance = 1e-7;
inline constexpr double kMinTolerance = 1e-9;
inline constexpr std::size_t kMaxThetaVertices = 128;

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const noexcept { return upper - lower; }
    double midpoint() const noexcept { return 0.5 * (lower + upper); }
    bool contains(double x, double slack = 0.0) const noexcept { return lower - slack <= x && x <= upper + slack; }
};

/**
 * Certified bracket for the Lovász number of a graph.
 *
 * primal_X is feasible for max <J, X> s.t. tr X = 1, X_ij = 0 on edges, X psd,
 * and lower = <J, primal_X>. dual_certificate D has D_ii = 1 and D_ij = 1 on
 * every non-edge, and upper = lambda_1(D). Weak duality puts the true value in
 * [lower, upper].
 */
struct ThetaResult {
    std::size_t n = 0;
    double lower = 0.0;
    double upper = 0.0;
    SymmetricMatrix primal_X;
    SymmetricMatrix dual_certificate;
    std::size_t iterations = 0;

    double gap() const noexcept { return upper - lower; }
    Interval bracket() const noexcept { return {lower, upper}; }
};

// Thrown when the interior-point iteration cap is hit before the gap closes.
// The best certified bracket found so far is attached.
class ThetaIterationLimit : public Error {
public:
    ThetaIterationLimit(const std::string& what, ThetaResult best) : Error(what), best_(std::move(best)) {}
    const ThetaResult& best() const noexcept { return best_; }

private:
    ThetaResult best_;
};

struct ThetaOptions {
    double tol = kDefaultTolerance;
    std::size_t max_iterations = 200;
};

ThetaResult solve_theta(const Graph& g, const ThetaOptions& options);
ThetaResult solve_theta(const Graph& g, double tol = kDefaultTolerance);

struct CertificateCheck {
    bool primal_feasible = false;
    bool dual_pattern = false;
    double trace_error = 0.0;
    double edge_violation = 0.0;
    double primal_min_eigenvalue = 0.0;
    double objective = 0.0;      // <J, X> recomputed
    double dual_lambda1 = 0.0;   // lambda_1(D) recomputed
    bool reproduces_bracket = false;

    bool ok() const noexcept { return primal_feasible && dual_pattern && reproduces_bracket; }
};

// Re-derives both bracket ends from the stored witnesses alone.
CertificateCheck check_certificates(const Graph& g, const ThetaResult& result);

/**
 * Unit vectors u_1..u_n in R^d, optionally with a unit handle c.
 *
 * A representation of G requires u_i . u_j = 0 whenever i != j is a non-edge.
 */
class OrthonormalRepresentation {
public:
    OrthonormalRepresentation(std::size_t dim, std::vector<std::vector<double>> vectors,
                              std::optional<std::vector<double>> handle = std::nullopt);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return size_; }
    std::span<const double> vector(std::size_t i) const;
    bool has_handle() const noexcept { return handle_.has_value(); }
    std::span<const double> handle() const;

private:
    std::size_t dim_;
    std::size_t size_;
    std::vector<double> data_;
    std::optional<std::vector<double>> handle_;
};

inline constexpr double kRepresentationTolerance = 1e-8;

struct RepresentationReport {
    bool valid = false;
    double worst_norm_error = 0.0;
    std::optional<Vertex> worst_norm_vertex;
    double worst_orthogonality = 0.0;   // max |u_i . u_j| over non-edges
    std::optional<Edge> worst_pair;
};

RepresentationReport validate_representation(const Graph& g, const OrthonormalRepresentation& u);

// max_i (c . u_i)^-2; +infinity when some c . u_i vanishes.
double handle_value(const OrthonormalRepresentation& u);

SymmetricMatrix gram_matrix(const OrthonormalRepresentation& u);

// lambda_1(M(U)) for a valid representation U of G: a lower bound on theta of the complement of G.
double gram_lambda1_lower_bound(const Graph& g, const OrthonormalRepresentation& u);

// Vertex i maps to a_i (x) b_i in dimension a.dim() * b.dim(); handles tensor when both exist.
OrthonormalRepresentation tensor_representation(const OrthonormalRepresentation& a,
                                                const OrthonormalRepresentation& b);

struct SubmultiplicativityReport {
    Interval intersection;
    Interval first;
    Interval second;
    double slack = 0.0;
    bool holds = false;
};

inline constexpr std::size_t kMaxSubmultiplicativityVertices = 64;

// theta(G1 cap G2) <= theta(G1) theta(G2), judged on the unfavourable bracket ends.
SubmultiplicativityReport verify_submultiplicativity(const Graph& a, const Graph& b, double tol = kDefaultTolerance);
// The same inequality in edge-union form: theta(compl(G1 cup G2)) <= theta(compl G1) theta(compl G2).
SubmultiplicativityReport verify_edge_union_bound(const Graph& a, const Graph& b, double tol = kDefaultTolerance);

} // namespace thetalab
