#include "thetalab/bounds.hpp"
#include "thetalab/chebyshev.hpp"
#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/ramsey.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace thetalab;

namespace {

// Reports cross the boundary as plain dicts, through the same JSON schema the CLI writes.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<double>> dense_rows(const SymmetricMatrix& m) {
    std::vector<std::vector<double>> rows(m.dim(), std::vector<double>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
    return rows;
}

EdgeColouring colouring_from_python(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return colouring_from_name(obj.cast<std::string>());
    const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return colouring_from_json(Json::parse(text));
}

} // namespace

PYBIND11_MODULE(thetalab, m) {
    m.doc() = "Lovász theta, odd-girth bounds and odd-cycle Ramsey experiments";

    // translators run newest first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_graph(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_name", &graph_from_name)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("complement", [](const Graph& g) { return complement(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("cycle", &cycle_graph);
    m.def("complete", &complete_graph);
    m.def("empty", &empty_graph);
    m.def("path", &path_graph);
    m.def("petersen", &petersen_graph);
    m.def("hypercube", &hypercube_graph);
    m.def("strong_product", &strong_product, py::arg("a"), py::arg("b"), py::arg("cap") = kDefaultProductCap);
    m.def("edge_union", &edge_union);
    m.def("edge_intersection", &edge_intersection);

    m.def("odd_girth", [](const Graph& g) {
        const auto r = odd_girth(g);
        py::dict d;
        d["girth"] = r.girth.is_infinite() ? py::object(py::none()) : py::cast(r.girth.value());
        d["witness"] = r.witness ? py::cast(r.witness->vertices) : py::object(py::none());
        return d;
    });
    m.def("independence_number", [](const Graph& g, std::uint64_t budget) {
        return to_python(Json(independence_number(g, budget)));
    }, py::arg("g"), py::arg("budget") = kDefaultNodeBudget);
    m.def("chromatic_number", &chromatic_number_small);

    m.def("solve_theta", [](const Graph& g, double tol, bool matrices) {
        const auto r = [&] {
            py::gil_scoped_release release;
            return solve_theta(g, tol);
        }();
        py::dict d = to_python(Json(ThetaSummary::of(r)));
        if (matrices) {
            d["X"] = dense_rows(r.primal_X);
            d["D"] = dense_rows(r.dual_certificate);
        }
        return d;
    }, py::arg("g"), py::arg("tol") = kDefaultTolerance, py::arg("matrices") = false);

    m.def("cheb_eval", [](std::size_t g, double x) { return cheb_eval_recurrence(ChebDegree(g), x); });
    m.def("cheb_eval_closed", [](std::size_t g, double x) { return cheb_eval_closed(ChebDegree(g), x); });
    m.def("cheb_lower_bound", [](std::size_t g, double x) { return cheb_lower_bound(ChebDegree(g), x); });
    // Python ints are unbounded, so coefficients come back exact.
    m.def("cheb_coefficients", [](std::size_t g) {
        py::list out;
        for (auto c : cheb_coefficients(ChebDegree(g))) out.append(py::int_(py::str(to_string(c))));
        return out;
    });

    m.def("epsilon", &epsilon_ng, py::arg("n"), py::arg("g"));
    m.def("girth_theta_bound", &girth_theta_bound, py::arg("n"), py::arg("g"));
    m.def("girth_check", [](const Graph& g, double tol, std::size_t g_cap) {
        return to_python(Json(girth_theta_bound_check(g, tol, g_cap)));
    }, py::arg("g"), py::arg("tol") = kDefaultTolerance, py::arg("g_cap") = kDefaultGirthCap);
    m.def("g_bound", [](std::size_t k, std::optional<double> delta, std::optional<std::size_t> n) {
        if (delta.has_value() == n.has_value()) throw InvalidArgument("pass exactly one of delta or n");
        const auto in = delta ? RamseyBoundInputs::from_delta(k, *delta) : RamseyBoundInputs::from_vertices(k, *n);
        return to_python(Json(derive_g_bound(in)));
    }, py::arg("k"), py::kw_only(), py::arg("delta") = py::none(), py::arg("n") = py::none());

    m.def("mono_odd_cycle", [](const py::object& c) {
        return to_python(Json(shortest_mono_odd_cycle(colouring_from_python(c))));
    }, py::arg("colouring"));
    m.def("theta_pipeline", [](const py::object& c, double tol) {
        return to_python(Json(theta_pipeline(colouring_from_python(c), tol)));
    }, py::arg("colouring"), py::arg("tol") = kDefaultTolerance);
    m.def("brute_force_L", [](std::size_t k) { return to_python(Json(brute_force_L(k))); });
    m.def("capacity_witness", [](const py::object& c, std::size_t max_factors, std::size_t cap) {
        return to_python(Json(capacity_witness(colouring_from_python(c), max_factors, cap)));
    }, py::arg("colouring"), py::arg("max_factors") = 3, py::arg("cap") = kDefaultProductCap);
    m.def("local_search", [](std::size_t n, std::size_t k, std::uint64_t seed, std::size_t iterations) {
        return to_python(Json(local_search_colouring(n, k, seed, iterations)));
    }, py::arg("n"), py::arg("k"), py::arg("seed") = 1, py::arg("iterations") = 100000);
}
