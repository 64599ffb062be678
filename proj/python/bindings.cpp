#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "colreconf/cliques.hpp"
#include "colreconf/colouring.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/error.hpp"
#include "colreconf/graph.hpp"
#include "colreconf/graph_io.hpp"
#include "colreconf/patterns.hpp"
#include "colreconf/reconfiguration.hpp"
#include "colreconf/serialization.hpp"

namespace py = pybind11;
using namespace colreconf;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph(n, edges);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

Colouring make_colouring(const std::vector<Colour>& assignment, std::size_t k) {
    return Colouring(assignment, k);
}

std::vector<Colour> as_list(const Colouring& c) {
    return {c.assignment().begin(), c.assignment().end()};
}

Limits make_limits(std::uint64_t node_cap, std::uint64_t lazy_budget, std::size_t search_cap) {
    Limits l;
    l.node_cap = node_cap;
    l.lazy_budget = lazy_budget;
    l.search_cap = search_cap;
    validate(l);
    return l;
}

py::object json_to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph colouring reconfiguration toolkit";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &edge_pairs)
        .def("edge_list", [](const Graph& g) {
            std::ostringstream s;
            write_edge_list(s, g);
            return s.str();
        })
        .def("dimacs", [](const Graph& g) {
            std::ostringstream s;
            write_dimacs(s, g);
            return s.str();
        })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("parse_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return read_dimacs(in);
    });

    m.def("cycle", &cycle, py::arg("n"));
    m.def("power", &power, py::arg("g"), py::arg("d"));
    m.def("join", &join, py::arg("a"), py::arg("b"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("n"));

    m.def(
        "find_induced",
        [](const Graph& g, const std::string& pattern) { return find_induced(g, parse_pattern(pattern)); },
        py::arg("g"), py::arg("pattern"), "Witness tuple for 'p5', '2k2' or 'P<t>', or None.");
    m.def(
        "clique_number",
        [](const Graph& g, std::size_t search_cap) {
            Limits l;
            l.search_cap = search_cap;
            return clique_number(g, l);
        },
        py::arg("g"), py::arg("search_cap") = Limits{}.search_cap);
    m.def(
        "chromatic_number",
        [](const Graph& g, std::size_t search_cap) {
            Limits l;
            l.search_cap = search_cap;
            return chromatic_number(g, l);
        },
        py::arg("g"), py::arg("search_cap") = Limits{}.search_cap);

    m.def(
        "is_proper",
        [](const Graph& g, const std::vector<Colour>& c, std::size_t k) { return is_proper(g, make_colouring(c, k)); },
        py::arg("g"), py::arg("colouring"), py::arg("k"));
    m.def(
        "is_frozen",
        [](const Graph& g, const std::vector<Colour>& c, std::size_t k) { return is_frozen(g, make_colouring(c, k)); },
        py::arg("g"), py::arg("colouring"), py::arg("k"));
    m.def(
        "enumerate_colourings",
        [](const Graph& g, std::size_t k) {
            std::vector<std::vector<Colour>> out;
            for (const auto& c : enumerate_colourings(g, k)) out.push_back(as_list(c));
            return out;
        },
        py::arg("g"), py::arg("k"));
    m.def("count_colourings", &count_colourings, py::arg("g"), py::arg("k"));

    m.def(
        "build_reconfig",
        [](const Graph& g, std::size_t k, std::uint64_t node_cap) {
            const auto r = build_reconfig(g, k, make_limits(node_cap, Limits{}.lazy_budget, Limits{}.search_cap));
            std::vector<std::vector<Colour>> nodes;
            for (std::size_t i = 0; i < r.node_count(); ++i) nodes.push_back(as_list(r.node(i)));
            return py::make_tuple(nodes, r.edges());
        },
        py::arg("g"), py::arg("k"), py::arg("node_cap") = Limits{}.node_cap,
        "Returns (nodes, edges) of R_k(g).");
    m.def(
        "is_mixing",
        [](const Graph& g, std::size_t k, std::uint64_t node_cap) {
            return json_to_py(to_json(is_mixing(g, k, make_limits(node_cap, Limits{}.lazy_budget, Limits{}.search_cap))));
        },
        py::arg("g"), py::arg("k"), py::arg("node_cap") = Limits{}.node_cap);
    m.def(
        "neighbours",
        [](const Graph& g, const std::vector<Colour>& c, std::size_t k) {
            std::vector<std::vector<Colour>> out;
            for (const auto& x : neighbours(g, make_colouring(c, k))) out.push_back(as_list(x));
            return out;
        },
        py::arg("g"), py::arg("colouring"), py::arg("k"));
    m.def(
        "component_of",
        [](const Graph& g, const std::vector<Colour>& c, std::size_t k, std::uint64_t budget) {
            const auto r = component_of(g, make_colouring(c, k), budget);
            py::dict d;
            if (const auto* full = std::get_if<ExploredFully>(&r)) {
                d["explored_fully"] = true;
                d["size"] = full->size;
                d["frozen"] = full->frozen;
            } else {
                d["explored_fully"] = false;
                d["visited"] = std::get<BudgetExhausted>(r).visited;
            }
            return d;
        },
        py::arg("g"), py::arg("colouring"), py::arg("k"), py::arg("node_budget") = Limits{}.lazy_budget);
    m.def(
        "find_frozen",
        [](const Graph& g, std::size_t k, std::size_t limit, std::uint64_t budget) {
            return json_to_py(to_json(find_frozen(g, k, limit, make_limits(Limits{}.node_cap, budget, Limits{}.search_cap)), k));
        },
        py::arg("g"), py::arg("k"), py::arg("limit") = 1, py::arg("budget") = Limits{}.lazy_budget);

    m.def("build_base", [] { return json_to_py(to_json(build_base())); },
          "The 16-vertex instance as a JSON-style dict.");
    m.def(
        "build_family", [](std::size_t p) { return json_to_py(to_json(build_family(p))); }, py::arg("p"));
    m.def(
        "instance_graph", [](std::size_t p) { return build_family(p).graph; }, py::arg("p"));
    m.def(
        "verify",
        [](std::size_t p) { return json_to_py(to_json(verify(build_family(p)))); }, py::arg("p"),
        "Verification report for the p-copy instance.");
    m.def(
        "verify_bundle",
        [](const std::string& bundle_json) {
            return json_to_py(to_json(verify(instance_from_json(Json::parse(bundle_json)))));
        },
        py::arg("bundle_json"));
}
