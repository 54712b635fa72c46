#include "thetalab/report.hpp"

#include "thetalab/error.hpp"

#include <fstream>

namespace thetalab {

void to_json(Json& j, const Interval& v) { j = Json{{"lower", v.lower}, {"upper", v.upper}}; }

void from_json(const Json& j, Interval& v) {
    j.at("lower").get_to(v.lower);
    j.at("upper").get_to(v.upper);
}

void to_json(Json& j, const ThetaSummary& v) {
    j = Json{{"n", v.n}, {"lower", v.lower}, {"upper", v.upper}, {"gap", v.upper - v.lower},
             {"iterations", v.iterations}};
}

void from_json(const Json& j, ThetaSummary& v) {
    j.at("n").get_to(v.n);
    j.at("lower").get_to(v.lower);
    j.at("upper").get_to(v.upper);
    j.at("iterations").get_to(v.iterations);
}

void to_json(Json& j, const OddGirth& v) {
    if (v.is_infinite()) j = "INFINITE";
    else j = v.value();
}

void from_json(const Json& j, OddGirth& v) {
    if (j.is_string() && j.get<std::string>() == "INFINITE") v = OddGirth::infinite();
    else if (j.is_number_unsigned()) v = OddGirth::finite(j.get<std::size_t>());
    else throw ParseError("odd girth must be an odd length or \"INFINITE\"");
}

void to_json(Json& j, const CertificateCheck& v) {
    j = Json{{"primal_feasible", v.primal_feasible},
             {"dual_pattern", v.dual_pattern},
             {"trace_error", v.trace_error},
             {"edge_violation", v.edge_violation},
             {"primal_min_eigenvalue", v.primal_min_eigenvalue},
             {"objective", v.objective},
             {"dual_lambda1", v.dual_lambda1},
             {"reproduces_bracket", v.reproduces_bracket},
             {"ok", v.ok()}};
}

void to_json(Json& j, const GirthBoundReport& v) {
    j = Json{{"n", v.n},
             {"g", v.g},
             {"epsilon", v.epsilon},
             {"bound", v.girth_bound},
             {"alon_kahale", v.alon_kahale},
             {"theta", v.theta_bracket},
             {"slack", v.slack},
             {"holds", v.holds}};
}

void to_json(Json& j, const GirthCheckReport& v) {
    j = Json{{"n", v.n}, {"odd_girth", v.odd_girth}, {"theta_complement", v.theta_complement},
             {"rows", v.rows}, {"holds", v.holds}};
}

void to_json(Json& j, const VertexTransitiveReport& v) {
    j = Json{{"n", v.n}, {"theta", v.theta}, {"theta_complement", v.theta_complement},
             {"product", v.product}, {"slack", v.slack}, {"holds", v.holds}};
}

void to_json(Json& j, const ChainStep& v) {
    j = Json{{"name", v.name}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"holds", v.holds}};
}

void to_json(Json& j, const GBoundDerivation& v) {
    j = Json{{"k", v.k},
             {"delta", v.delta},
             {"n", v.n},
             {"g_bound", v.g_bound},
             {"largest_unrefuted_g", v.largest_unrefuted_g},
             {"epsilon_at_g", v.epsilon_at_g},
             {"delta_over_k", v.delta_over_k},
             {"root_gap", v.root_gap},
             {"log2_step", v.log2_step},
             {"chain", v.chain},
             {"chain_holds", v.chain_holds}};
}

void to_json(Json& j, const InequalityAudit& v) {
    j = Json{{"name", v.name}, {"points", v.points}, {"min_margin", v.min_margin},
             {"argmin", v.argmin}, {"holds", v.holds}};
}

void to_json(Json& j, const SubmultiplicativityReport& v) {
    j = Json{{"intersection", v.intersection}, {"first", v.first}, {"second", v.second},
             {"slack", v.slack}, {"holds", v.holds}};
}

void to_json(Json& j, const MonoOddCycleReport& v) {
    j = Json{{"length", nullptr}, {"colour", nullptr}, {"witness", nullptr}, {"per_colour", v.per_colour}};
    if (v.length) j["length"] = *v.length;
    if (v.colour) j["colour"] = *v.colour;
    if (v.witness) j["witness"] = v.witness->vertices;
}

void to_json(Json& j, const PipelineColourRow& v) {
    j = Json{{"colour", v.colour}, {"odd_girth", v.odd_girth}, {"g", v.g},
             {"theta_complement", v.theta_complement}, {"bound", v.bound}, {"slack", v.slack},
             {"holds", v.holds}};
}

void to_json(Json& j, const PipelineReport& v) {
    j = Json{{"n", v.n},
             {"k", v.k},
             {"rows", v.rows},
             {"product", v.product},
             {"lhs", v.lhs},
             {"slack", v.slack},
             {"product_holds", v.product_holds},
             {"girth_bound_product", v.girth_bound_product},
             {"girth_product_holds", v.girth_product_holds},
             {"shortest_mono_odd_cycle", nullptr},
             {"g_bound", nullptr},
             {"g_bound_holds", v.g_bound_holds},
             {"holds", v.holds}};
    if (v.shortest_mono_odd_cycle) j["shortest_mono_odd_cycle"] = *v.shortest_mono_odd_cycle;
    if (v.g_bound) j["g_bound"] = *v.g_bound;
}

void to_json(Json& j, const BruteForceResult& v) {
    j = Json{{"k", v.k},
             {"n", v.n},
             {"L", v.L},
             {"extremal", colouring_to_json(v.extremal)},
             {"colourings", v.colourings},
             {"extremal_count", v.extremal_count},
             {"every_colouring_has_odd_cycle", v.every_colouring_has_odd_cycle}};
}

void to_json(Json& j, const SetSearchResult& v) {
    j = Json{{"value", v.value}, {"optimal", v.optimal}, {"witness", v.witness}, {"nodes", v.nodes}};
}

void to_json(Json& j, const CapacityReport& v) {
    j = Json{{"n", v.n},
             {"k", v.k},
             {"product_vertices", v.product_vertices},
             {"diagonal", v.diagonal},
             {"diagonal_independent", v.diagonal_independent},
             {"alpha", nullptr},
             {"induced_in_strong_power", v.induced_in_strong_power},
             {"strong_power_built", v.strong_power_built}};
    if (v.alpha) j["alpha"] = *v.alpha;
}

void to_json(Json& j, const LocalSearchResult& v) {
    j = Json{{"best", colouring_to_json(v.best)}, {"report", v.report}, {"iterations", v.iterations},
             {"restarts", v.restarts}};
}

Json graph_info(const Graph& g) {
    const auto n = g.vertex_count();
    std::size_t dmin = n, dmax = 0;
    for (Vertex v = 0; v < n; ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    return Json{{"n", n}, {"m", g.edge_count()}, {"min_degree", dmin}, {"max_degree", dmax},
                {"odd_girth", odd_girth(g).girth}};
}

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (auto [u, v] : g.edges()) out.push_back({u, v});
    return out;
}

Json cheb_coefficients_json(const std::vector<ChebCoefficient>& c) {
    Json out = Json::array();
    for (auto x : c) out.push_back(to_string(x));
    return out;
}

ChebCoefficient parse_cheb_coefficient(const std::string& s) {
    if (s.empty()) throw ParseError("empty coefficient");
    std::size_t i = 0;
    const bool negative = s[0] == '-';
    if (negative) ++i;
    if (i == s.size()) throw ParseError("bad coefficient '" + s + "'");
    ChebCoefficient value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad coefficient '" + s + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
}

std::vector<ChebCoefficient> cheb_coefficients_from_json(const Json& j) {
    std::vector<ChebCoefficient> out;
    for (const auto& x : j) out.push_back(parse_cheb_coefficient(x.get<std::string>()));
    return out;
}

Json colouring_to_json(const EdgeColouring& c) {
    Json edges = Json::array();
    const auto colours = c.colours();
    for (std::size_t r = 0; r < colours.size(); ++r) {
        auto [u, v] = EdgeColouring::pair_of_rank(r);
        edges.push_back({u, v, colours[r]});
    }
    return Json{{"n", c.vertex_count()}, {"k", c.colour_count()}, {"edges", edges}};
}

EdgeColouring colouring_from_json(const Json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto k = j.at("k").get<std::size_t>();
        if (n < 1 || n > kMaxVertices) throw ParseError("colouring vertex count out of range");
        if (k < 1 || k > kMaxColours) throw ParseError("colour count out of range");
        const auto pairs = EdgeColouring::pair_count(n);
        std::vector<Colour> colours(pairs);
        std::vector<bool> seen(pairs, false);
        const auto& edges = j.at("edges");
        if (!edges.is_array()) throw ParseError("'edges' must be an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (!e.is_array() || e.size() != 3) throw ParseError("edge " + std::to_string(i) + " is not [u, v, colour]");
            const auto u = e[0].get<std::size_t>();
            const auto v = e[1].get<std::size_t>();
            const auto col = e[2].get<std::size_t>();
            if (u >= n || v >= n || u == v) throw ParseError("edge " + std::to_string(i) + " is not a pair of K_n");
            if (col >= k) throw ParseError("edge " + std::to_string(i) + " has colour >= k");
            const auto r = EdgeColouring::pair_rank(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (seen[r]) throw ParseError("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") listed twice");
            seen[r] = true;
            colours[r] = static_cast<Colour>(col);
        }
        if (edges.size() != pairs) {
            throw ParseError("colouring lists " + std::to_string(edges.size()) + " pairs, K_" + std::to_string(n) +
                             " has " + std::to_string(pairs));
        }
        return EdgeColouring(n, k, std::move(colours));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed colouring: ") + e.what());
    }
}

EdgeColouring load_colouring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open colouring file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return colouring_from_json(j);
}

void save_colouring(const std::string& path, const EdgeColouring& c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write colouring file '" + path + "'");
    out << colouring_to_json(c).dump() << '\n';
}

} // namespace thetalab
