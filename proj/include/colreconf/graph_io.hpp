#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "colreconf/graph.hpp"

namespace colreconf {

/// Edge-list text: first line "n m", then m lines "u v" with 0 <= u < v < n.
/// Throws ParseError naming the offending line and column.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// DIMACS .col: "c" comment lines, one "p edge n m" header, then m lines
/// "e u v" with 1-based vertices.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

/// Graphviz export.
void write_dot(std::ostream& out, const Graph& g, std::string_view name = "G");

enum class GraphFormat { automatic, edge_list, dimacs, json };

/// "auto", "edgelist", "dimacs", "json".
GraphFormat parse_graph_format(std::string_view text);

/// .json -> json, .col / .dimacs -> dimacs, anything else -> edge list.
GraphFormat detect_graph_format(const std::filesystem::path& path);

}  // namespace colreconf
