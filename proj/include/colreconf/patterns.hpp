#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colreconf/graph.hpp"

namespace colreconf {

/// Induced path on `length` vertices.
struct PathPattern {
    std::size_t length;
};

/// Two disjoint edges with no edge between them.
struct TwoK2Pattern {};

/// Arbitrary pattern graph.
struct CustomPattern {
    Graph pattern;
};

using Pattern = std::variant<PathPattern, TwoK2Pattern, CustomPattern>;

std::size_t pattern_order(const Pattern& pattern);
Graph pattern_graph(const Pattern& pattern);
std::string pattern_name(const Pattern& pattern);

/// Accepts "2k2", "p5", "P5", "P<t>" (case-insensitive).
Pattern parse_pattern(std::string_view text);

/// Finds a vertex tuple of g inducing the pattern, or nullopt if g is
/// pattern-free.
///
/// Witness layout:
///   PathP(t)  ordered path (v0, ..., v{t-1}) with v0 < v{t-1} when t >= 2;
///   TwoK2     (a, b, c, d) with ab and cd edges, a < b, c < d, a < c;
///   Custom    image of pattern vertex i at position i.
///
/// The search is exhaustive and deterministic: the first witness in
/// lexicographic search order is returned. Throws InputError when the
/// pattern has more vertices than g, or for a path of length 0.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Pattern& pattern);

/// True when `witness` induces exactly `pattern` in g, in the layout above.
bool induces(const Graph& g, const Pattern& pattern, const std::vector<Vertex>& witness);

}  // namespace colreconf
