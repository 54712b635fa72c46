#pragma once

#include "thetalab/graph.hpp"
#include "thetalab/theta.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace thetalab {

using Colour = std::uint8_t;
inline constexpr std::size_t kMaxColours = 64;

/**
 * k-edge-colouring of the complete graph K_n.
 *
 * Colours are stored in a flat triangular array indexed by pair rank
 * r(u, v) = v (v - 1) / 2 + u for u < v.
 */
class EdgeColouring {
public:
    EdgeColouring(std::size_t n, std::size_t k, std::vector<Colour> colours);

    static EdgeColouring from_function(std::size_t n, std::size_t k,
                                       const std::function<Colour(Vertex, Vertex)>& colour_of);
    static std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }
    static std::size_t pair_rank(Vertex u, Vertex v) noexcept;
    static Edge pair_of_rank(std::size_t rank) noexcept;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t colour_count() const noexcept { return k_; }
    Colour colour(Vertex u, Vertex v) const;
    std::span<const Colour> colours() const noexcept { return colours_; }

    EdgeColouring recoloured(Vertex u, Vertex v, Colour c) const;

    bool operator==(const EdgeColouring&) const = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Colour> colours_;
};

Graph colour_class(const EdgeColouring& c, Colour i);
std::vector<Graph> colour_classes(const EdgeColouring& c);

inline constexpr std::size_t kMaxBinaryColours = 12;

// K_{2^k}; edge uv gets the position of the highest set bit of u xor v.
EdgeColouring binary_colouring(std::size_t k);
// K_n in a single colour.
EdgeColouring monochromatic_colouring(std::size_t n);
// K_5 split into the 5-cycle (colour 0) and the pentagram (colour 1).
EdgeColouring pentagon_colouring();
// "mono:n", "pentagons", "binary:k"
EdgeColouring colouring_from_name(std::string_view name);
EdgeColouring relabel_colouring(const EdgeColouring& c, std::span<const Vertex> permutation);

struct MonoOddCycleReport {
    std::optional<std::size_t> length;   // nullopt: every colour class is bipartite
    std::optional<Colour> colour;
    std::optional<CycleWitness> witness;
    std::vector<OddGirth> per_colour;
};

MonoOddCycleReport shortest_mono_odd_cycle(const EdgeColouring& c);

struct PipelineColourRow {
    Colour colour = 0;
    OddGirth odd_girth;
    std::size_t g = 0;            // largest odd g with no odd cycle of length <= g in this class
    Interval theta_complement;
    double bound = 0.0;           // 2 + epsilon_{n,g}
    double slack = 0.0;
    bool holds = false;
};

struct PipelineReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PipelineColourRow> rows;
    Interval product;             // product of the per-colour theta brackets
    double lhs = 0.0;             // theta of the complement of K_n, i.e. n
    double slack = 0.0;
    bool product_holds = false;   // n <= product.upper + slack
    double girth_bound_product = 0.0;
    bool girth_product_holds = false;
    std::optional<std::size_t> shortest_mono_odd_cycle;
    std::optional<double> g_bound;  // only when 2^k < n <= 2^(k+1)
    bool g_bound_holds = true;
    bool holds = false;
};

inline constexpr std::size_t kMaxPipelineVertices = 48;

PipelineReport theta_pipeline(const EdgeColouring& c, double tol = kDefaultTolerance, std::size_t g_cap = 99);

struct BruteForceResult {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t L = 0;
    EdgeColouring extremal;
    std::size_t colourings = 0;
    std::size_t extremal_count = 0;
    bool every_colouring_has_odd_cycle = false;
};

// Exhaustive over all k-colourings of K_{2^k + 1}, k in {1, 2}.
BruteForceResult brute_force_L(std::size_t k);

struct CapacityReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t product_vertices = 0;
    std::vector<Vertex> diagonal;
    bool diagonal_independent = false;
    std::optional<SetSearchResult> alpha;
    bool induced_in_strong_power = false;
    bool strong_power_built = false;   // the check used the explicit power graph
};

CapacityReport capacity_witness(const EdgeColouring& c, std::size_t max_factors, std::size_t cap = kDefaultProductCap,
                                std::uint64_t budget = kDefaultNodeBudget);

struct LocalSearchResult {
    EdgeColouring best;
    MonoOddCycleReport report;
    std::size_t iterations = 0;
    std::size_t restarts = 0;
};

inline constexpr std::size_t kMaxSearchVertices = 64;
inline constexpr std::size_t kMaxSearchColours = 8;
inline constexpr std::size_t kRestartAfter = 2000;

LocalSearchResult local_search_colouring(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t iterations);

} // namespace thetalab
