#include "colreconf/serialization.hpp"

#include <algorithm>
#include <sstream>

#include "colreconf/error.hpp"

namespace colreconf {
namespace {

template <typename T>
T required(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("JSON field '") + key + "' has the wrong type");
    }
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    const auto n = required<std::size_t>(j, "n");
    const auto pairs = required<std::vector<std::vector<std::int64_t>>>(j, "edges");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (p.size() != 2 || p[0] < 0 || p[1] < 0)
            throw InputError("each edge must be a pair of non-negative vertex indices");
        edges.push_back({static_cast<Vertex>(p[0]), static_cast<Vertex>(p[1])});
    }
    Graph g(n, edges);
    if (j.contains("m") && j.at("m").get<std::size_t>() != g.edge_count())
        throw InputError("JSON field 'm' disagrees with the edge list");
    return g;
}

Json to_json(const Colouring& c) {
    Json a = Json::array();
    for (auto x : c.assignment()) a.push_back(x);
    return Json{{"k", c.palette()}, {"assignment", std::move(a)}};
}

Colouring colouring_from_json(const Json& j) {
    const auto k = required<std::size_t>(j, "k");
    const auto raw = required<std::vector<std::int64_t>>(j, "assignment");
    std::vector<Colour> a;
    a.reserve(raw.size());
    for (auto x : raw) {
        if (x < 1 || static_cast<std::uint64_t>(x) > k)
            throw InputError("colour " + std::to_string(x) + " outside 1.." + std::to_string(k));
        a.push_back(static_cast<Colour>(x));
    }
    return Colouring(std::move(a), k);
}

Json to_json(const PaperInstance& instance) {
    return Json{{"p", instance.copies},
                {"graph", to_json(instance.graph)},
                {"alpha", to_json(instance.alpha)},
                {"beta", to_json(instance.beta)}};
}

PaperInstance instance_from_json(const Json& j) {
    const auto p = required<std::size_t>(j, "p");
    if (p == 0) throw InputError("copy count p must be positive");
    if (!j.contains("graph")) throw InputError("missing JSON field 'graph'");
    PaperInstance inst{p, graph_from_json(j.at("graph")),
                       colouring_from_json(j.contains("alpha") ? j.at("alpha") : Json()),
                       colouring_from_json(j.contains("beta") ? j.at("beta") : Json())};
    return inst;
}

Json to_json(const MixingVerdict& v) {
    Json j;
    j["connected"] = v.connected;
    j["components"] = v.component_count ? Json(*v.component_count) : Json(nullptr);
    if (v.frozen_witness) {
        j["witness"] = to_json(*v.frozen_witness);
        j["witness_kind"] = "frozen";
        j["witness_other"] = nullptr;
    } else if (v.separated_pair) {
        j["witness"] = to_json(v.separated_pair->first);
        j["witness_kind"] = "component_pair";
        j["witness_other"] = to_json(v.separated_pair->second);
    } else {
        j["witness"] = nullptr;
        j["witness_kind"] = nullptr;
        j["witness_other"] = nullptr;
    }
    j["exhaustive"] = v.exhaustive;
    return j;
}

Json to_json(const FrozenSearchResult& r, std::size_t k) {
    Json j;
    // A frozen colouring with k >= 2 has a distinct relabelling, so R_k is
    // disconnected; without one nothing is decided.
    if (!r.colourings.empty() && k >= 2)
        j["connected"] = false;
    else
        j["connected"] = nullptr;
    j["components"] = nullptr;
    j["witness"] = r.colourings.empty() ? Json(nullptr) : to_json(r.colourings.front());
    j["exhaustive"] = r.exhaustive;
    Json list = Json::array();
    for (const auto& c : r.colourings) list.push_back(to_json(c));
    j["frozen"] = std::move(list);
    j["nodes_visited"] = r.nodes_visited;
    return j;
}

Json to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e{{"name", c.name},
               {"expected", c.expected},
               {"observed", c.observed},
               {"status", std::string(to_string(c.status))},
               {"pass", c.status == CheckStatus::pass}};
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(std::move(e));
    }
    return Json{{"p", report.copies},
                {"vertices", report.vertices},
                {"edges", report.edges},
                {"checks", std::move(checks)},
                {"pass", report.passed()}};
}

std::string render_table(const VerificationReport& report) {
    std::size_t wn = 5, we = 8, wo = 8;
    for (const auto& c : report.checks) {
        wn = std::max(wn, c.name.size());
        we = std::max(we, c.expected.size());
        wo = std::max(wo, c.observed.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream out;
    out << "instance p=" << report.copies << ": " << report.vertices << " vertices, " << report.edges
        << " edges\n";
    out << pad("check", wn) << "  " << pad("expected", we) << "  " << pad("observed", wo)
        << "  status\n";
    out << std::string(wn, '-') << "  " << std::string(we, '-') << "  " << std::string(wo, '-')
        << "  -------\n";
    for (const auto& c : report.checks) {
        out << pad(c.name, wn) << "  " << pad(c.expected, we) << "  " << pad(c.observed, wo) << "  "
            << to_string(c.status);
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << '\n';
    }
    out << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string reconfig_to_dot(const ReconfigGraph& r) {
    std::ostringstream out;
    out << "graph R" << r.palette() << " {\n";
    for (std::size_t i = 0; i < r.node_count(); ++i)
        out << "  " << i << " [label=\"" << r.node(i).to_string() << "\"];\n";
    for (auto [a, b] : r.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace colreconf
