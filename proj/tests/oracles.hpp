#pragma once

// Independent reference implementations used to check the library.

#include "thetalab/graph.hpp"
#include "thetalab/theta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using thetalab::Graph;
using thetalab::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

// Shortest odd closed walk, via boolean reachability matrices for walks of each
// length. Its length equals the odd girth.
inline std::optional<std::size_t> odd_girth_by_walks(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) reach[u][v] = g.adjacent(u, v);
    for (std::size_t len = 1; len <= 2 * n + 1; ++len) {
        if (len % 2 == 1)
            for (Vertex v = 0; v < n; ++v)
                if (reach[v][v]) return len;
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = 0; w < n; ++w)
                if (reach[u][w])
                    for (Vertex v = 0; v < n; ++v)
                        if (g.adjacent(w, v)) next[u][v] = true;
        reach = std::move(next);
    }
    return std::nullopt;
}

// Largest independent set by trying every subset; n <= 20.
inline std::size_t alpha_by_subsets(const Graph& g) {
    const auto n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (Vertex u = 0; u < n && independent; ++u) {
            if (!(mask >> u & 1)) continue;
            for (Vertex v = u + 1; v < n; ++v)
                if ((mask >> v & 1) && g.adjacent(u, v)) {
                    independent = false;
                    break;
                }
        }
        if (independent) best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
    return best;
}

// Smallest number of colours in a proper vertex colouring, by trying every assignment.
inline std::size_t chromatic_by_assignment(const Graph& g) {
    const auto n = g.vertex_count();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> col(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (col[u] == col[v]) {
                    proper = false;
                    break;
                }
            if (proper) return k;
            std::size_t i = 0;
            while (i < n && ++col[i] == k) col[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

// Adjacency spectrum of C_n: 2 cos(2 pi j / n).
inline std::vector<double> cycle_spectrum(std::size_t n) {
    std::vector<double> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(2.0 * std::cos(2.0 * M_PI * static_cast<double>(j) / n));
    return out;
}

// T_g(x) = cos(g arccos x) on [-1, 1], cosh(g arccosh x) for x >= 1.
inline double chebyshev_trig(std::size_t g, double x) {
    if (std::abs(x) <= 1.0) return std::cos(static_cast<double>(g) * std::acos(x));
    if (x > 1.0) return std::cosh(static_cast<double>(g) * std::acosh(x));
    const double s = (g % 2 == 0) ? 1.0 : -1.0;
    return s * std::cosh(static_cast<double>(g) * std::acosh(-x));
}

struct RandomRepresentation {
    Graph graph;
    thetalab::OrthonormalRepresentation rep;
};

// Builds vectors one vertex at a time: vertex i is made orthogonal to a random
// subset of earlier vectors (kept small enough that the span is not all of R^d),
// and those pairs become the non-edges. The handle is a random unit vector.
inline RandomRepresentation random_representation(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::bernoulli_distribution coin(0.5);
    auto random_unit = [&] {
        std::vector<double> x(d);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& c : x) {
                c = gauss(rng);
                norm += c * c;
            }
        } while (norm < 1e-6);
        for (auto& c : x) c /= std::sqrt(norm);
        return x;
    };
    std::vector<std::vector<double>> vectors;
    Graph::Builder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<double>> basis;  // orthonormal basis of the chosen span
        std::vector<std::size_t> orthogonal_to;
        for (std::size_t j = 0; j < i; ++j) {
            if (basis.size() + 1 >= d || !coin(rng)) continue;
            auto w = vectors[j];
            for (const auto& e : basis) {
                double dot = 0.0;
                for (std::size_t t = 0; t < d; ++t) dot += w[t] * e[t];
                for (std::size_t t = 0; t < d; ++t) w[t] -= dot * e[t];
            }
            double norm = 0.0;
            for (double c : w) norm += c * c;
            if (norm > 1e-8) {
                for (auto& c : w) c /= std::sqrt(norm);
                basis.push_back(w);
            } else if (basis.empty()) {
                continue;
            }
            orthogonal_to.push_back(j);
        }
        std::vector<double> x;
        double norm = 0.0;
        do {
            x = random_unit();
            for (const auto& e : basis) {
                double dot = 0.0;
                for (std::size_t t = 0; t < d; ++t) dot += x[t] * e[t];
                for (std::size_t t = 0; t < d; ++t) x[t] -= dot * e[t];
            }
            norm = 0.0;
            for (double c : x) norm += c * c;
        } while (norm < 1e-4);
        for (auto& c : x) c /= std::sqrt(norm);
        vectors.push_back(x);
        for (std::size_t j = 0; j < i; ++j)
            if (std::find(orthogonal_to.begin(), orthogonal_to.end(), j) == orthogonal_to.end())
                b.add_edge(static_cast<Vertex>(j), static_cast<Vertex>(i));
    }
    return {std::move(b).build(), thetalab::OrthonormalRepresentation(d, std::move(vectors), random_unit())};
}

} // namespace oracle
