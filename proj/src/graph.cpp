#include "thetalab/graph.hpp"

#include "thetalab/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace thetalab {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_order(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) {
        throw InvalidArgument("graphs have different vertex counts: " + std::to_string(a.vertex_count()) +
                              " vs " + std::to_string(b.vertex_count()));
    }
}

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbours(v);
    return adj;
}

} // namespace

// ---------------------------------------------------------------------------
// Graph

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbours(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    if (v >= n_) throw InvalidArgument("vertex out of range");
    return {bits_.data() + v * words_, words_};
}

Graph::Builder::Builder(std::size_t n) : n_(n), words_(words_for(n)) {
    if (n < 1 || n > kMaxVertices) {
        throw InvalidArgument("vertex count must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                              std::to_string(n));
    }
    bits_.assign(n_ * words_, 0);
}

void Graph::Builder::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::Builder::has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

Graph Graph::Builder::build() && { return Graph(n_, words_, std::move(bits_)); }

// ---------------------------------------------------------------------------
// Construction and set operations

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph::Builder b(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= n || v >= n) {
            throw EdgeListError(i, "edge " + std::to_string(i) + " (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ") has an endpoint outside [0, " +
                                       std::to_string(n) + ")");
        }
        if (u == v) {
            throw EdgeListError(i, "edge " + std::to_string(i) + " is a self-loop at vertex " + std::to_string(u));
        }
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const auto n = g.vertex_count();
    Graph::Builder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph edge_union(const Graph& a, const Graph& b) {
    require_same_order(a, b);
    Graph::Builder out(a.vertex_count());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u, v);
    return std::move(out).build();
}

Graph edge_intersection(const Graph& a, const Graph& b) {
    require_same_order(a, b);
    Graph::Builder out(a.vertex_count());
    for (auto [u, v] : a.edges()) {
        if (b.adjacent(u, v)) out.add_edge(u, v);
    }
    return std::move(out).build();
}

Graph disjoint_union(std::span<const Graph> graphs) {
    if (graphs.empty()) throw InvalidArgument("disjoint_union needs at least one graph");
    std::size_t total = 0;
    for (const auto& g : graphs) total += g.vertex_count();
    Graph::Builder out(total);
    Vertex offset = 0;
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges()) out.add_edge(offset + u, offset + v);
        offset += static_cast<Vertex>(g.vertex_count());
    }
    return std::move(out).build();
}

Graph strong_product(const Graph& a, const Graph& b, std::size_t cap) {
    const auto na = a.vertex_count();
    const auto nb = b.vertex_count();
    if (na * nb > std::min(cap, kMaxVertices)) {
        throw SizeCapExceeded("strong product would have " + std::to_string(na * nb) + " vertices, cap is " +
                              std::to_string(std::min(cap, kMaxVertices)));
    }
    auto closed = [](const Graph& g, Vertex v) {
        auto nb = g.neighbours(v);
        nb.push_back(v);
        return nb;
    };
    Graph::Builder out(na * nb);
    for (Vertex u = 0; u < na; ++u) {
        const auto cu = closed(a, u);
        for (Vertex v = 0; v < nb; ++v) {
            const auto cv = closed(b, v);
            const Vertex self = static_cast<Vertex>(u * nb + v);
            for (Vertex u2 : cu) {
                for (Vertex v2 : cv) {
                    const Vertex other = static_cast<Vertex>(u2 * nb + v2);
                    if (other > self) out.add_edge(self, other);
                }
            }
        }
    }
    return std::move(out).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation) {
    const auto n = g.vertex_count();
    if (permutation.size() != n) throw InvalidArgument("permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (Vertex p : permutation) {
        if (p >= n || seen[p]) throw InvalidArgument("not a permutation of the vertex set");
        seen[p] = true;
    }
    Graph::Builder out(n);
    for (auto [u, v] : g.edges()) out.add_edge(permutation[u], permutation[v]);
    return std::move(out).build();
}

// ---------------------------------------------------------------------------
// Generators

Graph complete_graph(std::size_t n) {
    Graph::Builder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return Graph::Builder(n).build(); }

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
    Graph::Builder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return std::move(b).build();
}

Graph path_graph(std::size_t n) {
    Graph::Builder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    Graph::Builder out(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) out.add_edge(u, static_cast<Vertex>(a + v));
    return std::move(out).build();
}

Graph petersen_graph() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    Graph::Builder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, 5 + i);
    }
    return std::move(b).build();
}

Graph hypercube_graph(std::size_t k) {
    if (k > 16) throw InvalidArgument("hypercube dimension must be at most 16");
    const std::size_t n = std::size_t{1} << k;
    Graph::Builder b(n);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < k; ++bit) {
            Vertex w = v ^ (Vertex{1} << bit);
            if (v < w) b.add_edge(v, w);
        }
    return std::move(b).build();
}

Graph graph_from_name(std::string_view name) {
    auto colon = name.find(':');
    std::string kind(name.substr(0, colon));
    std::optional<std::size_t> param;
    if (colon != std::string_view::npos) {
        std::string arg(name.substr(colon + 1));
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(arg, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (arg.empty() || pos != arg.size()) throw ParseError("bad graph parameter in '" + std::string(name) + "'");
        param = static_cast<std::size_t>(v);
    }
    auto need = [&]() {
        if (!param) throw ParseError("graph '" + kind + "' needs a size parameter, e.g. " + kind + ":5");
        return *param;
    };
    if (kind == "complete") return complete_graph(need());
    if (kind == "cycle") return cycle_graph(need());
    if (kind == "empty") return empty_graph(need());
    if (kind == "path") return path_graph(need());
    if (kind == "hypercube") return hypercube_graph(need());
    if (kind == "petersen") {
        if (param) throw ParseError("petersen takes no parameter");
        return petersen_graph();
    }
    throw ParseError("unknown graph generator '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Text IO

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::size_t expected = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        auto fail = [&](const std::string& what) {
            throw ParseError("line " + std::to_string(line_no) + ": " + what);
        };
        if (tag == "p") {
            if (n) fail("duplicate header");
            long long nv = -1, ne = -1;
            if (!(iss >> nv >> ne) || nv < 1 || ne < 0) fail("expected 'p <n> <m>'");
            n = static_cast<std::size_t>(nv);
            expected = static_cast<std::size_t>(ne);
        } else if (tag == "e") {
            if (!n) fail("edge before header");
            long long u = -1, v = -1;
            if (!(iss >> u >> v) || u < 0 || v < 0) fail("expected 'e <u> <v>'");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            fail("unknown line type '" + tag + "'");
        }
        std::string rest;
        if (iss >> rest) fail("trailing tokens");
    }
    if (!n) throw ParseError("missing 'p <n> <m>' header");
    if (edges.size() != expected) {
        throw ParseError("header declares " + std::to_string(expected) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return build_graph(*n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << "p " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write graph file '" + path + "'");
    write_graph(out, g);
}

// ---------------------------------------------------------------------------
// Odd girth

OddGirth OddGirth::finite(std::size_t length) {
    if (length < 3 || length % 2 == 0) throw InvalidArgument("odd girth must be an odd integer >= 3");
    OddGirth g;
    g.length_ = length;
    return g;
}

std::size_t OddGirth::value() const {
    if (!length_) throw InvalidArgument("odd girth is infinite");
    return *length_;
}

std::strong_ordering OddGirth::operator<=>(const OddGirth& other) const noexcept {
    if (is_infinite() || other.is_infinite()) return is_infinite() <=> other.is_infinite();
    return *length_ <=> *other.length_;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// BFS in the bipartite double cover from (source, even). State 2x+p is vertex x
// at walk parity p. Stops once (source, odd) is reached or the depth exceeds cutoff.
struct CoverBfs {
    std::vector<std::size_t> dist;
    std::size_t closed_walk = kUnreached;
};

CoverBfs cover_bfs(const std::vector<std::vector<Vertex>>& adj, Vertex source, std::size_t cutoff) {
    CoverBfs r;
    r.dist.assign(adj.size() * 2, kUnreached);
    std::deque<std::size_t> queue{std::size_t{2} * source};
    r.dist[2 * source] = 0;
    const std::size_t target = 2 * source + 1;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        const auto d = r.dist[s];
        if (d + 1 > cutoff) break;
        const auto x = s / 2;
        const auto p = s % 2;
        for (Vertex y : adj[x]) {
            const auto t = 2 * std::size_t{y} + (1 - p);
            if (r.dist[t] != kUnreached) continue;
            r.dist[t] = d + 1;
            if (t == target) {
                r.closed_walk = d + 1;
                return r;
            }
            queue.push_back(t);
        }
    }
    return r;
}

} // namespace

OddGirthResult odd_girth(const Graph& g) {
    if (two_colouring(g)) return {OddGirth::infinite(), std::nullopt};
    const auto n = g.vertex_count();
    const auto adj = adjacency_lists(g);
    std::vector<std::size_t> walk(n, kUnreached);
    std::atomic<std::size_t> best{n % 2 == 1 ? n : n - 1};
    detail::parallel_for(
        n,
        [&](std::size_t v) {
            auto r = cover_bfs(adj, static_cast<Vertex>(v), best.load());
            walk[v] = r.closed_walk;
            auto cur = best.load();
            while (r.closed_walk < cur && !best.compare_exchange_weak(cur, r.closed_walk)) {
            }
        },
        64);

    // lowest vertex index attaining the minimum
    std::size_t length = kUnreached;
    Vertex root = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (walk[v] < length) {
            length = walk[v];
            root = v;
        }
    }
    if (length == kUnreached) return {OddGirth::infinite(), std::nullopt};

    // Walk back from (root, odd) to (root, even), always stepping to the
    // lowest-index predecessor one layer closer.
    auto r = cover_bfs(adj, root, length);
    CycleWitness cycle;
    std::size_t state = 2 * std::size_t{root} + 1;
    while (r.dist[state] > 0) {
        const auto x = state / 2;
        const auto p = state % 2;
        std::size_t prev = kUnreached;
        for (Vertex y : adj[x]) {
            const auto t = 2 * std::size_t{y} + (1 - p);
            if (r.dist[t] + 1 == r.dist[state]) {
                prev = t;
                break;
            }
        }
        cycle.vertices.push_back(static_cast<Vertex>(x));
        state = prev;
    }
    std::reverse(cycle.vertices.begin(), cycle.vertices.end());
    // rotate so the cycle starts at the root
    auto it = std::find(cycle.vertices.begin(), cycle.vertices.end(), root);
    std::rotate(cycle.vertices.begin(), it, cycle.vertices.end());
    return {OddGirth::finite(length), std::move(cycle)};
}

bool is_odd_cycle(const Graph& g, const CycleWitness& cycle) {
    const auto& c = cycle.vertices;
    if (c.size() < 3 || c.size() % 2 == 0) return false;
    std::vector<Vertex> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= g.vertex_count() || c[(i + 1) % c.size()] >= g.vertex_count()) return false;
        if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    }
    return true;
}

std::optional<std::vector<std::uint8_t>> two_colouring(const Graph& g) {
    const auto n = g.vertex_count();
    constexpr std::uint8_t kNone = 2;
    std::vector<std::uint8_t> side(n, kNone);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != kNone) continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbours(x)) {
                if (side[y] == kNone) {
                    side[y] = static_cast<std::uint8_t>(1 - side[x]);
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

// ---------------------------------------------------------------------------
// Maximum clique by branch and bound with greedy colouring bounds

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : n_(g.vertex_count()), words_(words_for(n_)), budget_(budget) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::vector<std::size_t> deg(n_);
        for (Vertex v = 0; v < n_; ++v) deg[v] = g.degree(v);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
        adj_.assign(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= bit(j);
    }

    SetSearchResult run() {
        std::vector<std::uint64_t> p(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) p[i / 64] |= bit(i);
        current_.clear();
        best_.clear();
        best_.push_back(0);  // any single vertex is a clique
        expand(p);
        SetSearchResult r;
        r.value = best_.size();
        r.optimal = !aborted_;
        for (auto i : best_) r.witness.push_back(order_[i]);
        std::sort(r.witness.begin(), r.witness.end());
        r.nodes = nodes_;
        return r;
    }

private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }

    const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

    static bool empty(const std::vector<std::uint64_t>& s) {
        return std::all_of(s.begin(), s.end(), [](auto w) { return w == 0; });
    }

    void expand(std::vector<std::uint64_t>& p) {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        // greedy sequential colouring of p; bound[i] = colour of vertices[i]
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> bound;
        std::vector<std::uint64_t> uncoloured = p;
        std::size_t colour = 0;
        while (!empty(uncoloured)) {
            ++colour;
            std::vector<std::uint64_t> q = uncoloured;
            for (std::size_t w = 0; w < words_; ++w) {
                while (q[w] != 0) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                    uncoloured[v / 64] &= ~bit(v);
                    const auto* r = row(v);
                    for (std::size_t k = 0; k < words_; ++k) q[k] &= ~r[k];
                    q[v / 64] &= ~bit(v);
                    vertices.push_back(v);
                    bound.push_back(colour);
                }
            }
        }
        for (std::size_t i = vertices.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) return;
            const auto v = vertices[i];
            current_.push_back(v);
            std::vector<std::uint64_t> next(words_);
            const auto* r = row(v);
            for (std::size_t k = 0; k < words_; ++k) next[k] = p[k] & r[k];
            if (empty(next)) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            p[v / 64] &= ~bit(v);
            if (aborted_) return;
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::uint64_t budget_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

bool colourable(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& order, std::size_t k,
                std::vector<int>& colour, std::size_t depth, int used) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    const int limit = std::min<int>(static_cast<int>(k), used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (Vertex w : adj[v]) {
            if (colour[w] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colour[v] = c;
        if (colourable(adj, order, k, colour, depth + 1, std::max(used, c + 1))) return true;
        colour[v] = -1;
    }
    return false;
}

} // namespace

SetSearchResult clique_number(const Graph& g, std::uint64_t budget) { return CliqueSearch(g, budget).run(); }

SetSearchResult independence_number(const Graph& g, std::uint64_t budget) {
    return CliqueSearch(complement(g), budget).run();
}

std::size_t chromatic_number_small(const Graph& g) {
    const auto n = g.vertex_count();
    if (n > kChromaticLimit) {
        throw InvalidArgument("chromatic_number_small supports at most " + std::to_string(kChromaticLimit) +
                              " vertices, got " + std::to_string(n));
    }
    const auto adj = adjacency_lists(g);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    const std::size_t start = clique_number(g).value;
    for (std::size_t k = start; k <= n; ++k) {
        std::vector<int> colour(n, -1);
        if (colourable(adj, order, k, colour, 0, 0)) return k;
    }
    return n;
}

} // namespace thetalab
