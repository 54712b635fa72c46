#pragma once

#include "thetalab/bounds.hpp"
#include "thetalab/chebyshev.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/ramsey.hpp"
#include "thetalab/theta.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace thetalab {

using Json = nlohmann::json;

// Compact view of a ThetaResult without the matrices.
struct ThetaSummary {
    std::size_t n = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t iterations = 0;

    static ThetaSummary of(const ThetaResult& r) { return {r.n, r.lower, r.upper, r.iterations}; }
    bool operator==(const ThetaSummary&) const = default;
};

void to_json(Json& j, const Interval& v);
void from_json(const Json& j, Interval& v);
void to_json(Json& j, const ThetaSummary& v);
void from_json(const Json& j, ThetaSummary& v);
// Odd girth serializes as its length, or the string "INFINITE".
void to_json(Json& j, const OddGirth& v);
void from_json(const Json& j, OddGirth& v);

void to_json(Json& j, const CertificateCheck& v);
void to_json(Json& j, const GirthBoundReport& v);
void to_json(Json& j, const GirthCheckReport& v);
void to_json(Json& j, const VertexTransitiveReport& v);
void to_json(Json& j, const ChainStep& v);
void to_json(Json& j, const GBoundDerivation& v);
void to_json(Json& j, const InequalityAudit& v);
void to_json(Json& j, const SubmultiplicativityReport& v);
void to_json(Json& j, const MonoOddCycleReport& v);
void to_json(Json& j, const PipelineColourRow& v);
void to_json(Json& j, const PipelineReport& v);
void to_json(Json& j, const BruteForceResult& v);
void to_json(Json& j, const SetSearchResult& v);
void to_json(Json& j, const CapacityReport& v);
void to_json(Json& j, const LocalSearchResult& v);

Json graph_info(const Graph& g);
Json edges_json(const Graph& g);

// Coefficients are written as decimal strings; T_63 does not fit in 64 bits.
Json cheb_coefficients_json(const std::vector<ChebCoefficient>& c);
std::vector<ChebCoefficient> cheb_coefficients_from_json(const Json& j);
ChebCoefficient parse_cheb_coefficient(const std::string& s);

// {"n": n, "k": k, "edges": [[u, v, colour], ...]} with every pair of K_n listed once.
Json colouring_to_json(const EdgeColouring& c);
EdgeColouring colouring_from_json(const Json& j);
EdgeColouring load_colouring(const std::string& path);
void save_colouring(const std::string& path, const EdgeColouring& c);

} // namespace thetalab
