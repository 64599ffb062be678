#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "colreconf/colouring.hpp"
#include "colreconf/graph.hpp"
#include "colreconf/limits.hpp"

namespace colreconf {

/// Explicit R_k(G): nodes are all proper k-colourings of the base graph in
/// lexicographic order, edges join colourings that differ at exactly one
/// vertex.
class ReconfigGraph {
public:
    using NodeEdge = std::pair<std::size_t, std::size_t>;

    ReconfigGraph(Graph base, std::size_t k, std::vector<Colour> flat_nodes,
                  std::vector<NodeEdge> edges);

    const Graph& base() const noexcept { return base_; }
    std::size_t palette() const noexcept { return k_; }
    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    Colouring node(std::size_t i) const;
    std::span<const Colour> node_assignment(std::size_t i) const;
    std::vector<Colouring> nodes() const;

    /// Sorted pairs (a, b) with a < b.
    const std::vector<NodeEdge>& edges() const noexcept { return edges_; }

    std::vector<std::size_t> degrees() const;
    std::vector<std::size_t> isolated_nodes() const;

    /// Connected-component label per node (first-appearance numbering).
    std::vector<std::size_t> component_labels() const;
    std::size_t component_count() const;

private:
    Graph base_;
    std::size_t k_;
    std::size_t node_count_;
    std::vector<Colour> flat_;
    std::vector<NodeEdge> edges_;
};

/// Builds R_k(g). Edges are found by bucketing colourings on the key
/// "assignment with vertex i erased" for each i. Throws ResourceError when
/// the colouring count exceeds limits.node_cap.
ReconfigGraph build_reconfig(const Graph& g, std::size_t k, const Limits& limits = {});

struct MixingVerdict {
    bool connected = false;
    /// Set whenever R_k was built explicitly.
    std::optional<std::size_t> component_count;
    /// A frozen colouring, when R_k is disconnected and one exists.
    std::optional<Colouring> frozen_witness;
    /// Otherwise, representatives of two different components.
    std::optional<std::pair<Colouring, Colouring>> separated_pair;
    bool exhaustive = true;
};

/// Connectivity of R_k(g) by union-find over the bucketed edges.
///
/// When g has no proper k-colouring at all, R_k is empty; this is reported
/// as connected = false with component_count = 0 and no witness.
MixingVerdict is_mixing(const Graph& g, std::size_t k, const Limits& limits = {});

/// Lazily yields the proper colourings that differ from a given one at
/// exactly one vertex, in (vertex, new colour) lexicographic order.
class NeighbourStream {
public:
    /// Throws InputError if c is not a proper colouring of g.
    NeighbourStream(const Graph& g, Colouring c);

    std::optional<Colouring> next();

private:
    const Graph* g_;
    Colouring c_;
    Vertex vertex_ = 0;
    Colour colour_ = 0;
    std::vector<bool> blocked_;
};

std::vector<Colouring> neighbours(const Graph& g, const Colouring& c);

struct ExploredFully {
    std::size_t size;
    bool frozen;
};

struct BudgetExhausted {
    std::size_t visited;
};

using ComponentResult = std::variant<ExploredFully, BudgetExhausted>;

/// BFS over R_k(g) from c, k = c.palette(), visiting at most node_budget
/// colourings. Throws InputError for improper c or a zero budget.
ComponentResult component_of(const Graph& g, const Colouring& c, std::uint64_t node_budget);

/// Members of c's component in lexicographic order, or nullopt when the
/// budget runs out first.
std::optional<std::vector<Colouring>> component_members(const Graph& g, const Colouring& c,
                                                        std::uint64_t node_budget);

struct FrozenSearchResult {
    /// Frozen colourings found, in lexicographic order.
    std::vector<Colouring> colourings;
    /// True when the whole search tree was explored.
    bool exhaustive = false;
    std::uint64_t nodes_visited = 0;
};

/// Backtracking search for frozen k-colourings.
///
/// Vertices are assigned in order of descending degree (ties by index).
/// Branches are cut on a monochromatic edge, or when some vertex w is still
/// missing more colours than it has unassigned closed-neighbourhood
/// members (in particular, a fully assigned N[w] missing a colour).
/// Stops after `limit` results or after limits.lazy_budget search nodes; in
/// either case `exhaustive` is false unless nothing was left to explore.
FrozenSearchResult find_frozen(const Graph& g, std::size_t k, std::size_t limit,
                               const Limits& limits = {});

}  // namespace colreconf
