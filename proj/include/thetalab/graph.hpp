#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetalab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultProductCap = 4096;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/**
 * Simple undirected graph on the vertex set {0, ..., n-1}.
 *
 * Adjacency is stored as one bitset row per vertex. Values are immutable once
 * built; every operation below returns a fresh graph.
 */
class Graph {
public:
    class Builder;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbours(Vertex v) const;
    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    std::size_t words_per_row() const noexcept { return words_; }
    std::span<const std::uint64_t> row(Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    Graph(std::size_t n, std::size_t words, std::vector<std::uint64_t> bits)
        : n_(n), words_(words), bits_(std::move(bits)) {}

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Mutable staging area used by every graph-producing operation.
class Graph::Builder {
public:
    explicit Builder(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    Graph build() &&;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Rejects out-of-range endpoints and self-loops with the index of the offending pair.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

Graph complement(const Graph& g);
Graph edge_union(const Graph& a, const Graph& b);
Graph edge_intersection(const Graph& a, const Graph& b);
Graph disjoint_union(std::span<const Graph> graphs);
// Pair (u, v) is vertex u * b.vertex_count() + v.
Graph strong_product(const Graph& a, const Graph& b, std::size_t cap = kDefaultProductCap);
Graph relabel(const Graph& g, std::span<const Vertex> permutation);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph hypercube_graph(std::size_t k);

// "complete:n", "cycle:n", "empty:n", "petersen", "hypercube:k".
Graph graph_from_name(std::string_view name);

// Text format: "p <n> <m>" followed by m lines "e <u> <v>", 0-based.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

/// Length of the shortest odd cycle, or INFINITE for bipartite graphs.
class OddGirth {
public:
    static OddGirth infinite() noexcept { return OddGirth{}; }
    static OddGirth finite(std::size_t length);

    bool is_infinite() const noexcept { return !length_.has_value(); }
    std::size_t value() const;
    // True when the graph has no odd cycle of length <= g.
    bool exceeds(std::size_t g) const noexcept { return is_infinite() || *length_ > g; }

    bool operator==(const OddGirth&) const = default;
    std::strong_ordering operator<=>(const OddGirth& other) const noexcept;

private:
    std::optional<std::size_t> length_;
};

struct CycleWitness {
    std::vector<Vertex> vertices;
};

struct OddGirthResult {
    OddGirth girth;
    std::optional<CycleWitness> witness;
};

OddGirthResult odd_girth(const Graph& g);
// Distinct vertices, odd length, every cyclically consecutive pair an edge.
bool is_odd_cycle(const Graph& g, const CycleWitness& cycle);
// BFS 2-colouring; empty when the graph has an odd cycle.
std::optional<std::vector<std::uint8_t>> two_colouring(const Graph& g);

struct SetSearchResult {
    std::size_t value = 0;
    bool optimal = false;  // false: node budget exhausted, value is best found
    std::vector<Vertex> witness;
    std::uint64_t nodes = 0;
};

SetSearchResult independence_number(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);
SetSearchResult clique_number(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

inline constexpr std::size_t kChromaticLimit = 12;
std::size_t chromatic_number_small(const Graph& g);

} // namespace thetalab
