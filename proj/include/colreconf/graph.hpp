#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "colreconf/vertex_set.hpp"

namespace colreconf {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is held as one bitset row per vertex, so edge queries are O(1)
/// and neighbourhood intersections cost O(n/64). The graph is immutable once
/// constructed.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws InputError on self-loops, repeated pairs or out-of-range
    /// endpoints. Endpoint order within a pair does not matter.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
    const VertexSet& neighbours(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return degrees_[v]; }

    /// N[v]: v together with its neighbours.
    VertexSet closed_neighbourhood(Vertex v) const;

    /// All edges, sorted, each with u < v.
    std::vector<Edge> edges() const;

    /// Neighbour lists in increasing order.
    std::vector<std::vector<Vertex>> adjacency_lists() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
    std::vector<std::size_t> degrees_;
    std::size_t edge_count_ = 0;
};

/// C_n. Throws InputError for n < 3.
Graph cycle(std::size_t n);

/// u ~ v iff 1 <= dist(u, v) <= d in g. Throws InputError for d < 1.
Graph power(const Graph& g, std::size_t d);

/// Disjoint union of a and b plus every edge between them. Vertices of b are
/// shifted by a.vertex_count().
Graph join(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
/// Path on n vertices 0-1-...-(n-1).
Graph path_graph(std::size_t n);

/// Subgraph induced by the given vertices, relabelled in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// BFS distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

}  // namespace colreconf
