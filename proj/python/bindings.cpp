#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vicolor/catalog.hpp"
#include "vicolor/certificate.hpp"
#include "vicolor/constructive.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/io.hpp"
#include "vicolor/power.hpp"
#include "vicolor/workflows.hpp"

namespace py = pybind11;
using namespace vicolor;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<Edge> es;
    for (const auto& [u, v] : edges)
        es.push_back(make_edge(u, v));
    return Graph(n, es);
}

std::vector<std::pair<int, int>> edge_list(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

// coloring as (vertex colors, {(v, w): color})
using PyColoring = std::pair<std::vector<int>, std::map<std::pair<int, int>, int>>;

ViColoring to_vi(const Graph& g, const PyColoring& c)
{
    ViColoring out(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out.set(Element::of(v), c.first.at(static_cast<std::size_t>(v)));
    for (const auto& [key, color] : c.second)
        out.set(Element{key.first, key.second}, color);
    return out;
}

PyColoring from_vi(const ViColoring& c)
{
    PyColoring out{c.vertex_colors, {}};
    for (const auto& [i, color] : c.incidence_colors)
        out.second[{i.vertex, i.other}] = color;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "vi-simultaneous coloring: exact solvers, constructions and checkers";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", &edge_list)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph(" + to_graph6(g) + ")"; });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("to_graph6", &to_graph6);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("all_graphs", &all_graphs, py::arg("n"), py::arg("connected_only") = true);

    m.def("power_graph_edges", [](const Graph& g, int mm, int n) { return edge_list(fractional_power(g, mm, n).graph()); });

    // certificates cross the boundary as their JSON text
    m.def("solve", [](const Graph& g, const std::string& parameter, std::optional<int> s, long long budget) {
        py::gil_scoped_release release;
        return to_json(solve(g, parameter, s, budget));
    }, py::arg("g"), py::arg("parameter"), py::arg("s") = std::nullopt, py::arg("node_budget") = kDefaultNodeBudget);
    m.def("chi_vi1_via_tvi1", [](const Graph& g, long long budget) {
        py::gil_scoped_release release;
        return to_json(chi_vi1_via_tvi1(g, budget));
    }, py::arg("g"), py::arg("node_budget") = kDefaultNodeBudget);
    m.def("verify_certificate", [](const std::string& text) { return verify_certificate(certificate_from_json(text)); });
    m.def("certificate_dot", [](const std::string& text) { return certificate_dot(certificate_from_json(text)); });

    m.def("construct", [](const std::string& family, std::optional<int> n, std::optional<int> mm, std::optional<int> s,
                          std::optional<Graph> g) { return to_json(construct({family, n, mm, s, g})); },
          py::arg("family"), py::arg("n") = std::nullopt, py::arg("m") = std::nullopt, py::arg("s") = std::nullopt,
          py::arg("graph") = std::nullopt);

    m.def("is_valid_vi_coloring", [](const Graph& g, const PyColoring& c, std::optional<int> s) {
        return is_valid_vi_coloring(g, to_vi(g, c), s);
    }, py::arg("g"), py::arg("coloring"), py::arg("max_spread") = std::nullopt);
    m.def("color_complete", [](int n) { return from_vi(color_complete(n)); });
    m.def("color_cycle", [](int n) { return from_vi(color_cycle(n)); });

    m.def("scan_graph6", [](const std::string& text, int max_n, long long budget) {
        std::istringstream in(text);
        ScanOptions opt;
        opt.max_n = max_n;
        opt.node_budget = budget;
        const auto entries = read_graph_stream(in);
        py::gil_scoped_release release;
        return to_json(scan(entries, opt));
    }, py::arg("text"), py::arg("max_n") = 6, py::arg("node_budget") = kDefaultNodeBudget);
}
