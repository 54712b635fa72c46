#include "thetalab/ramsey.hpp"

#include "thetalab/bounds.hpp"
#include "thetalab/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace thetalab {

// ---------------------------------------------------------------------------
// EdgeColouring

EdgeColouring::EdgeColouring(std::size_t n, std::size_t k, std::vector<Colour> colours)
    : n_(n), k_(k), colours_(std::move(colours)) {
    if (n < 1 || n > kMaxVertices) throw InvalidArgument("colouring vertex count out of range");
    if (k < 1 || k > kMaxColours) throw InvalidArgument("colour count must be in [1, " + std::to_string(kMaxColours) + "]");
    if (colours_.size() != pair_count(n)) {
        throw InvalidArgument("colouring of K_" + std::to_string(n) + " needs " + std::to_string(pair_count(n)) +
                              " entries, got " + std::to_string(colours_.size()));
    }
    for (std::size_t r = 0; r < colours_.size(); ++r) {
        if (colours_[r] >= k) {
            auto [u, v] = pair_of_rank(r);
            throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has colour " +
                                  std::to_string(colours_[r]) + " >= k = " + std::to_string(k));
        }
    }
}

EdgeColouring EdgeColouring::from_function(std::size_t n, std::size_t k,
                                           const std::function<Colour(Vertex, Vertex)>& colour_of) {
    std::vector<Colour> colours(pair_count(n));
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) colours[pair_rank(u, v)] = colour_of(u, v);
    return EdgeColouring(n, k, std::move(colours));
}

std::size_t EdgeColouring::pair_rank(Vertex u, Vertex v) noexcept {
    if (u > v) std::swap(u, v);
    return std::size_t{v} * (v - 1) / 2 + u;
}

Edge EdgeColouring::pair_of_rank(std::size_t rank) noexcept {
    auto v = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(rank))) / 2.0);
    while (v * (v - 1) / 2 > rank) --v;
    while ((v + 1) * v / 2 <= rank) ++v;
    return {static_cast<Vertex>(rank - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

Colour EdgeColouring::colour(Vertex u, Vertex v) const {
    if (u == v || u >= n_ || v >= n_) throw InvalidArgument("not an edge of K_n");
    return colours_[pair_rank(u, v)];
}

EdgeColouring EdgeColouring::recoloured(Vertex u, Vertex v, Colour c) const {
    if (u == v || u >= n_ || v >= n_) throw InvalidArgument("not an edge of K_n");
    auto colours = colours_;
    colours[pair_rank(u, v)] = c;
    return EdgeColouring(n_, k_, std::move(colours));
}

Graph colour_class(const EdgeColouring& c, Colour i) {
    if (i >= c.colour_count()) throw InvalidArgument("colour id " + std::to_string(i) + " out of range");
    Graph::Builder b(c.vertex_count());
    const auto colours = c.colours();
    for (std::size_t r = 0; r < colours.size(); ++r) {
        if (colours[r] == i) {
            auto [u, v] = EdgeColouring::pair_of_rank(r);
            b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

std::vector<Graph> colour_classes(const EdgeColouring& c) {
    std::vector<Graph> out;
    for (std::size_t i = 0; i < c.colour_count(); ++i) out.push_back(colour_class(c, static_cast<Colour>(i)));
    return out;
}

EdgeColouring binary_colouring(std::size_t k) {
    if (k < 1 || k > kMaxBinaryColours) throw InvalidArgument("binary_colouring needs 1 <= k <= 12");
    return EdgeColouring::from_function(std::size_t{1} << k, k, [](Vertex u, Vertex v) {
        return static_cast<Colour>(std::bit_width(u ^ v) - 1);
    });
}

EdgeColouring monochromatic_colouring(std::size_t n) {
    return EdgeColouring(n, 1, std::vector<Colour>(EdgeColouring::pair_count(n), 0));
}

EdgeColouring pentagon_colouring() {
    return EdgeColouring::from_function(5, 2, [](Vertex u, Vertex v) {
        const auto d = (v + 5 - u) % 5;
        return static_cast<Colour>(d == 1 || d == 4 ? 0 : 1);
    });
}

EdgeColouring colouring_from_name(std::string_view name) {
    const auto colon = name.find(':');
    const std::string kind(name.substr(0, colon));
    std::size_t param = 0;
    if (colon != std::string_view::npos) {
        const std::string arg(name.substr(colon + 1));
        std::size_t pos = 0;
        try {
            param = std::stoul(arg, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (arg.empty() || pos != arg.size()) throw ParseError("bad colouring parameter in '" + std::string(name) + "'");
    } else if (kind != "pentagons") {
        throw ParseError("colouring '" + kind + "' needs a parameter");
    }
    if (kind == "mono") return monochromatic_colouring(param);
    if (kind == "binary") return binary_colouring(param);
    if (kind == "pentagons") {
        if (colon != std::string_view::npos) throw ParseError("pentagons takes no parameter");
        return pentagon_colouring();
    }
    throw ParseError("unknown colouring '" + kind + "'");
}

EdgeColouring relabel_colouring(const EdgeColouring& c, std::span<const Vertex> permutation) {
    const auto n = c.vertex_count();
    if (permutation.size() != n) throw InvalidArgument("permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (Vertex p : permutation) {
        if (p >= n || seen[p]) throw InvalidArgument("not a permutation of the vertex set");
        seen[p] = true;
    }
    std::vector<Colour> colours(c.colours().size());
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            colours[EdgeColouring::pair_rank(permutation[u], permutation[v])] = c.colour(u, v);
    return EdgeColouring(n, c.colour_count(), std::move(colours));
}

// ---------------------------------------------------------------------------
// Monochromatic odd cycles

MonoOddCycleReport shortest_mono_odd_cycle(const EdgeColouring& c) {
    MonoOddCycleReport report;
    for (std::size_t i = 0; i < c.colour_count(); ++i) {
        auto result = odd_girth(colour_class(c, static_cast<Colour>(i)));
        report.per_colour.push_back(result.girth);
        if (result.girth.is_infinite()) continue;
        if (!report.length || result.girth.value() < *report.length) {
            report.length = result.girth.value();
            report.colour = static_cast<Colour>(i);
            report.witness = std::move(result.witness);
        }
    }
    return report;
}

PipelineReport theta_pipeline(const EdgeColouring& c, double tol, std::size_t g_cap) {
    const auto n = c.vertex_count();
    const auto k = c.colour_count();
    if (n < 2 || n > kMaxPipelineVertices) throw InvalidArgument("theta_pipeline needs 2 <= n <= 48");
    if (g_cap < 1 || g_cap % 2 == 0) throw InvalidArgument("g cap must be odd");

    PipelineReport report;
    report.n = n;
    report.k = k;
    report.lhs = static_cast<double>(n);
    report.rows.resize(k);
    const auto classes = colour_classes(c);
    detail::parallel_for(k, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.colour = static_cast<Colour>(i);
        row.odd_girth = odd_girth(classes[i]).girth;
        row.g = row.odd_girth.is_infinite() ? g_cap : row.odd_girth.value() - 2;
        row.theta_complement = solve_theta(complement(classes[i]), tol).bracket();
        row.bound = girth_theta_bound(n, row.g);
        row.slack = 3.0 * tol + 4.0 * std::numeric_limits<double>::epsilon() * row.bound;
        row.holds = row.theta_complement.upper <= row.bound + row.slack;
    });

    report.product = {1.0, 1.0};
    report.girth_bound_product = 1.0;
    double first_order = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        report.product.lower *= report.rows[i].theta_complement.lower;
        report.product.upper *= report.rows[i].theta_complement.upper;
        report.girth_bound_product *= report.rows[i].bound;
        double others = 1.0;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) others *= report.rows[j].theta_complement.upper;
        first_order += others;
    }
    report.slack = 3.0 * tol * (1.0 + first_order);
    report.product_holds = report.lhs <= report.product.upper + report.slack;
    report.girth_product_holds = report.girth_bound_product >= report.lhs - report.slack;

    std::optional<std::size_t> shortest;
    for (const auto& row : report.rows) {
        if (!row.odd_girth.is_infinite() && (!shortest || row.odd_girth.value() < *shortest)) {
            shortest = row.odd_girth.value();
        }
    }
    report.shortest_mono_odd_cycle = shortest;
    if (k <= 6 && (std::size_t{1} << k) < n && n <= (std::size_t{2} << k)) {
        report.g_bound = derive_g_bound(RamseyBoundInputs::from_vertices(k, n)).g_bound;
        report.g_bound_holds = shortest && static_cast<double>(*shortest) <= *report.g_bound;
    }
    const bool rows_hold = std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.holds; });
    report.holds = report.product_holds && report.girth_product_holds && rows_hold && report.g_bound_holds;
    return report;
}

BruteForceResult brute_force_L(std::size_t k) {
    if (k != 1 && k != 2) throw InvalidArgument("brute_force_L supports k = 1 or k = 2");
    const std::size_t n = (std::size_t{1} << k) + 1;
    const std::size_t pairs = EdgeColouring::pair_count(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs; ++i) total *= k;

    std::vector<Colour> colours(pairs, 0);
    std::size_t best = 0;
    std::size_t best_count = 0;
    std::vector<Colour> best_colours;
    bool all_finite = true;
    for (std::size_t index = 0; index < total; ++index) {
        std::size_t rest = index;
        for (std::size_t r = 0; r < pairs; ++r) {
            colours[r] = static_cast<Colour>(rest % k);
            rest /= k;
        }
        const auto report = shortest_mono_odd_cycle(EdgeColouring(n, k, colours));
        if (!report.length) {
            all_finite = false;
            continue;
        }
        if (*report.length > best) {
            best = *report.length;
            best_count = 0;
            best_colours = colours;
        }
        if (*report.length == best) ++best_count;
    }
    return BruteForceResult{k, n, best, EdgeColouring(n, k, best_colours), total, best_count, all_finite};
}

// ---------------------------------------------------------------------------
// Shannon-capacity diagonal

CapacityReport capacity_witness(const EdgeColouring& c, std::size_t max_factors, std::size_t cap,
                                std::uint64_t budget) {
    const auto n = c.vertex_count();
    const auto k = c.colour_count();
    if (k > max_factors) {
        throw InvalidArgument("colouring has " + std::to_string(k) + " colours, more than max_factors = " +
                              std::to_string(max_factors));
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        size *= n;
        if (size > cap) throw SizeCapExceeded("strong product of " + std::to_string(k) + " factors on " +
                                              std::to_string(n) + " vertices exceeds the cap " + std::to_string(cap));
    }

    const auto classes = colour_classes(c);
    std::vector<Graph> complements;
    for (const auto& g : classes) complements.push_back(complement(g));
    Graph h = complements.front();
    for (std::size_t i = 1; i < k; ++i) h = strong_product(h, complements[i], cap);

    CapacityReport report;
    report.n = n;
    report.k = k;
    report.product_vertices = h.vertex_count();
    std::size_t step = 0;
    for (std::size_t i = 0; i < k; ++i) step = step * n + 1;
    for (Vertex v = 0; v < n; ++v) report.diagonal.push_back(static_cast<Vertex>(v * step));
    report.diagonal_independent = true;
    for (std::size_t a = 0; a < n && report.diagonal_independent; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (h.adjacent(report.diagonal[a], report.diagonal[b])) {
                report.diagonal_independent = false;
                break;
            }

    report.alpha = independence_number(h, budget);

    // H sits inside the k-th strong power of compl(G_1 + ... + G_k) via
    // (v_1, ..., v_k) -> (v_1, n + v_2, ..., (k - 1) n + v_k).
    const Graph big = complement(disjoint_union(classes));
    const auto hv = h.vertex_count();
    auto coordinates = [&](std::size_t index) {
        std::vector<Vertex> coords(k);
        for (std::size_t i = k; i-- > 0;) {
            coords[i] = static_cast<Vertex>(i * n + index % n);
            index /= n;
        }
        return coords;
    };
    const std::size_t kn = k * n;
    std::size_t power_size = 1;
    bool buildable = true;
    for (std::size_t i = 0; i < k && buildable; ++i) {
        power_size *= kn;
        buildable = power_size <= cap;
    }
    std::optional<Graph> power;
    if (buildable) {
        power = big;
        for (std::size_t i = 1; i < k; ++i) power = strong_product(*power, big, cap);
    }
    auto power_index = [&](const std::vector<Vertex>& coords) {
        std::size_t idx = 0;
        for (auto x : coords) idx = idx * kn + x;
        return static_cast<Vertex>(idx);
    };
    report.induced_in_strong_power = true;
    report.strong_power_built = power.has_value();
    for (std::size_t a = 0; a < hv && report.induced_in_strong_power; ++a) {
        const auto ca = coordinates(a);
        for (std::size_t b = a + 1; b < hv; ++b) {
            const auto cb = coordinates(b);
            bool adjacent_in_power;
            if (power) {
                adjacent_in_power = power->adjacent(power_index(ca), power_index(cb));
            } else {
                adjacent_in_power = true;
                for (std::size_t i = 0; i < k; ++i)
                    if (ca[i] != cb[i] && !big.adjacent(ca[i], cb[i])) adjacent_in_power = false;
            }
            if (adjacent_in_power != h.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
                report.induced_in_strong_power = false;
                break;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Local search for colourings without short monochromatic odd cycles

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Score {
    std::size_t shortest = kNone;         // kNone: no monochromatic odd cycle
    std::vector<std::size_t> girths;      // per-colour odd girths, ascending

    auto operator<=>(const Score&) const = default;
};

Score score_of(const std::vector<OddGirth>& per_colour) {
    Score s;
    for (const auto& g : per_colour) s.girths.push_back(g.is_infinite() ? kNone : g.value());
    std::sort(s.girths.begin(), s.girths.end());
    s.shortest = s.girths.empty() ? kNone : s.girths.front();
    return s;
}

} // namespace

LocalSearchResult local_search_colouring(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t iterations) {
    if (n < 2 || n > kMaxSearchVertices) throw InvalidArgument("local search needs 2 <= n <= 64");
    if (k < 1 || k > kMaxSearchColours) throw InvalidArgument("local search needs 1 <= k <= 8");

    std::mt19937_64 rng(seed);
    const std::size_t pairs = EdgeColouring::pair_count(n);
    std::uniform_int_distribution<std::size_t> pick_pair(0, pairs - 1);
    std::uniform_int_distribution<std::size_t> pick_colour(0, k - 1);

    auto random_colours = [&] {
        std::vector<Colour> colours(pairs);
        for (auto& col : colours) col = static_cast<Colour>(pick_colour(rng));
        return colours;
    };
    auto girths_of = [&](const std::vector<Colour>& colours) {
        EdgeColouring col(n, k, colours);
        std::vector<OddGirth> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(odd_girth(colour_class(col, static_cast<Colour>(i))).girth);
        return out;
    };

    std::vector<Colour> current = random_colours();
    std::vector<OddGirth> girths = girths_of(current);
    Score score = score_of(girths);
    std::vector<Colour> best = current;
    Score best_score = score;

    LocalSearchResult result{EdgeColouring(n, k, best), {}, 0, 0};
    std::size_t stale = 0;
    std::size_t it = 0;
    for (; it < iterations && best_score.shortest != kNone && k > 1; ++it) {
        if (stale >= kRestartAfter) {
            current = random_colours();
            girths = girths_of(current);
            score = score_of(girths);
            stale = 0;
            ++result.restarts;
        }
        const auto r = pick_pair(rng);
        const Colour old = current[r];
        auto fresh = static_cast<Colour>(pick_colour(rng) % (k - 1));
        if (fresh >= old) ++fresh;
        current[r] = fresh;
        EdgeColouring col(n, k, current);
        auto trial = girths;
        trial[old] = odd_girth(colour_class(col, old)).girth;
        trial[fresh] = odd_girth(colour_class(col, fresh)).girth;
        const Score next = score_of(trial);
        if (next >= score) {
            stale = next > score ? 0 : stale + 1;
            score = next;
            girths = std::move(trial);
            if (score > best_score) {
                best_score = score;
                best = current;
            }
        } else {
            current[r] = old;
            ++stale;
        }
    }
    result.best = EdgeColouring(n, k, best);
    result.report = shortest_mono_odd_cycle(result.best);
    result.iterations = it;
    return result;
}

} // namespace thetalab
