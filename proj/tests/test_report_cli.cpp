#include "cli.hpp"

#include "thetalab/error.hpp"
#include "thetalab/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace thetalab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("thetalab_test_" + name)).string();
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("theta summary round trip") {
    const auto r = solve_theta(cycle_graph(7));
    const auto s = ThetaSummary::of(r);
    const Json j = s;
    CHECK(j.at("gap").get<double>() == doctest::Approx(r.gap()));
    CHECK(Json::parse(j.dump()).get<ThetaSummary>() == s);
}

TEST_CASE("odd girth json") {
    CHECK(Json(OddGirth::infinite()) == "INFINITE");
    CHECK(Json(OddGirth::finite(7)) == 7);
    CHECK(Json(OddGirth::finite(7)).get<OddGirth>() == OddGirth::finite(7));
    CHECK(Json("INFINITE").get<OddGirth>() == OddGirth::infinite());
    CHECK_THROWS_AS(Json("none").get<OddGirth>(), ParseError);
}

TEST_CASE("chebyshev coefficients as strings") {
    const auto c = cheb_coefficients(ChebDegree(63));
    const auto j = cheb_coefficients_json(c);
    CHECK(j.size() == 64);
    CHECK(cheb_coefficients_from_json(Json::parse(j.dump())) == c);
    CHECK(parse_cheb_coefficient("-120") == -120);
    CHECK_THROWS_AS(parse_cheb_coefficient("1x"), ParseError);
}

TEST_CASE("colouring file round trip") {
    const auto c = binary_colouring(3);
    CHECK(colouring_from_json(colouring_to_json(c)) == c);
    const auto path = temp_path("colouring.json");
    save_colouring(path, c);
    CHECK(load_colouring(path) == c);
    std::remove(path.c_str());

    auto j = colouring_to_json(pentagon_colouring());
    j["edges"].erase(j["edges"].begin());
    CHECK_THROWS_AS(colouring_from_json(j), ParseError);
    j = colouring_to_json(pentagon_colouring());
    j["edges"][0] = Json::array({0, 0, 1});
    CHECK_THROWS_AS(colouring_from_json(j), ParseError);
    j = colouring_to_json(pentagon_colouring());
    j["edges"][1] = j["edges"][0];
    CHECK_THROWS_AS(colouring_from_json(j), ParseError);
    CHECK_THROWS_AS(colouring_from_json(Json{{"n", 3}}), ParseError);
    CHECK_THROWS_AS(load_colouring(temp_path("missing.json")), ParseError);
}

}

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    auto r = run({"theta", "solve", "--graph", "cycle:5"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["lower"].get<double>() == doctest::Approx(2.2360680).epsilon(1e-7));
    CHECK(j["upper"].get<double>() == doctest::Approx(2.2360680).epsilon(1e-7));

    r = run({"bounds", "g-bound", "--k", "2", "--delta", "0.25"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["g_bound"].get<double>() == doctest::Approx(22.627416997969522));

    r = run({"colouring", "brute-force", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["L"] == 5);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"theta"}).code == 2);
    CHECK(run({"theta", "solve"}).code == 2);
    CHECK(run({"theta", "solve", "--graph", "wheel:4"}).code == 2);
    CHECK(run({"--tol", "1e-12", "theta", "solve", "--graph", "cycle:5"}).code == 2);
    CHECK(run({"--format", "xml", "graph", "info", "--graph", "petersen"}).code == 2);
    CHECK(run({"theta", "solve", "--file", temp_path("nope.txt")}).code == 2);
    CHECK(run({"bounds", "g-bound", "--k", "2", "--delta", "0.3"}).code == 2);
    CHECK(run({"colouring", "brute-force", "--k", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("commands produce reports") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"graph", "info", "--graph", "petersen"},
             {"graph", "odd-girth", "--graph", "cycle:9"},
             {"graph", "gen", "--graph", "hypercube:3"},
             {"--tol", "1e-8", "theta", "certify", "--graph", "petersen"},
             {"cheb", "eval", "--g", "5", "--x", "1.1"},
             {"cheb", "coeffs", "--g", "63"},
             {"bounds", "audit", "--points", "1000"},
             {"bounds", "girth-check", "--graph", "cycle:11"},
             {"bounds", "g-bound", "--k", "3", "--n", "12"},
             {"colouring", "verify", "--colouring", "pentagons"},
             {"colouring", "pipeline", "--colouring", "binary:2"},
             {"--seed", "4", "colouring", "search", "--n", "6", "--k", "2", "--iterations", "2000"},
             {"capacity", "witness", "--colouring", "pentagons"}}) {
        const auto r = run(args);
        INFO(args[0] << " " << args[1]);
        CHECK(r.code == 0);
        CHECK(Json::accept(r.out));
    }
}

TEST_CASE("determinism, human format and file output") {
    const std::vector<std::string> search{"--seed", "9", "colouring", "search", "--n", "7", "--k", "2", "--iterations", "3000"};
    CHECK(run(search).out == run(search).out);
    const auto human = run({"--format", "human", "graph", "info", "--graph", "petersen"});
    CHECK(human.code == 0);
    CHECK(human.out.find("odd_girth: 5") != std::string::npos);

    const auto out_path = temp_path("report.json");
    const auto r = run({"--out", out_path, "graph", "odd-girth", "--graph", "cycle:7"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path);
    Json j;
    f >> j;
    CHECK(j["odd_girth"] == 7);
    std::remove(out_path.c_str());

    const auto graph_path = temp_path("graph.txt");
    CHECK(run({"graph", "gen", "--graph", "cycle:5", "--to", graph_path}).code == 0);
    const auto solved = run({"theta", "solve", "--file", graph_path});
    CHECK(solved.code == 0);
    CHECK(Json::parse(solved.out)["n"] == 5);
    std::remove(graph_path.c_str());

    const auto col_path = temp_path("search.json");
    CHECK(run({"colouring", "search", "--n", "5", "--k", "2", "--iterations", "5000", "--to", col_path}).code == 0);
    const auto verified = run({"colouring", "verify", "--file", col_path});
    CHECK(verified.code == 0);
    CHECK(Json::parse(verified.out)["mono_odd_cycle"]["length"] == 5);
    std::remove(col_path.c_str());
}

TEST_CASE("certificate dumps") {
    const auto prefix = temp_path("c5");
    CHECK(run({"theta", "certify", "--graph", "cycle:5", "--dump", prefix}).code == 0);
    std::ifstream x(prefix + ".X"), d(prefix + ".D");
    const auto X = read_matrix(x);
    const auto D = read_matrix(d);
    CHECK(X.trace() == doctest::Approx(1.0));
    CHECK(X.sum() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    CHECK(lambda_max(D) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    std::remove((prefix + ".X").c_str());
    std::remove((prefix + ".D").c_str());
}

}
