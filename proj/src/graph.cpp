#include "colreconf/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "colreconf/error.hpp"
#include "colreconf/limits.hpp"

namespace colreconf {

void validate(const Limits& limits) {
    if (limits.node_cap == 0 || limits.lazy_budget == 0 || limits.search_cap == 0 ||
        limits.enumeration_cap == 0)
        throw InputError("all caps and budgets must be positive");
}

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)), degrees_(n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (rows_[e.u].test(e.v))
            throw InputError("repeated edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "}");
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        ++degrees_[e.u];
        ++degrees_[e.v];
        ++edge_count_;
    }
}

VertexSet Graph::closed_neighbourhood(Vertex v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < rows_.size(); ++u) {
        for (Vertex v = rows_[u].next(u + 1); v < rows_.size(); v = rows_[u].next(v + 1))
            out.push_back({u, v});
    }
    return out;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
    std::vector<std::vector<Vertex>> out(rows_.size());
    for (Vertex v = 0; v < rows_.size(); ++v) out[v] = rows_[v].members();
    return out;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        auto j = static_cast<Vertex>((i + 1) % n);
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    return Graph(n, edges);
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
    constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        g.neighbours(u).for_each([&](Vertex w) {
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

Graph power(const Graph& g, std::size_t d) {
    if (d < 1) throw InputError("graph power exponent must be at least 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (dist[v] >= 1 && dist[v] <= d) edges.push_back({u, v});
    }
    return Graph(g.vertex_count(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    const auto na = static_cast<Vertex>(a.vertex_count());
    const auto nb = static_cast<Vertex>(b.vertex_count());
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + na, e.v + na});
    for (Vertex u = 0; u < na; ++u)
        for (Vertex v = 0; v < nb; ++v) edges.push_back({u, na + v});
    return Graph(na + nb, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i)
        for (Vertex j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) edges.push_back({i, j});
    return Graph(vertices.size(), edges);
}

}  // namespace colreconf
