#pragma once

#include <cstddef>
#include <vector>

#include "colreconf/graph.hpp"
#include "colreconf/limits.hpp"

namespace colreconf {

/// A maximum clique, vertices ascending. Branch and bound with greedy
/// colouring bounds. Throws ResourceError above limits.search_cap vertices.
std::vector<Vertex> maximum_clique(const Graph& g, const Limits& limits = {});

/// ω(g).
std::size_t clique_number(const Graph& g, const Limits& limits = {});

/// True if g has a proper k-colouring. Same cap as chromatic_number.
bool is_colourable(const Graph& g, std::size_t k, const Limits& limits = {});

/// Exact χ(g): tries k = ω(g), ω(g)+1, ... with a DSATUR backtracking search
/// that pre-colours a maximum clique. Throws ResourceError above
/// limits.search_cap vertices.
std::size_t chromatic_number(const Graph& g, const Limits& limits = {});

}  // namespace colreconf
