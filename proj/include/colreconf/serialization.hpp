#pragma once

#include <string>

#include <json.hpp>

#include "colreconf/colouring.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/graph.hpp"
#include "colreconf/reconfiguration.hpp"

namespace colreconf {

using Json = nlohmann::ordered_json;

/// {"n": int, "m": int, "edges": [[u, v], ...]} with u < v, sorted.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"k": int, "assignment": [int, ...]}, colours 1-based.
Json to_json(const Colouring& c);
Colouring colouring_from_json(const Json& j);

/// {"p": int, "graph": {...}, "alpha": {...}, "beta": {...}}
Json to_json(const PaperInstance& instance);
PaperInstance instance_from_json(const Json& j);

/// {"connected", "components", "witness", "exhaustive"} plus
/// "witness_kind" ("frozen" | "component_pair" | null) and "witness_other".
Json to_json(const MixingVerdict& verdict);

/// Same envelope as the mixing verdict, with "connected" false when a frozen
/// colouring was found (k >= 2) and null when undetermined; the found
/// colourings are listed under "frozen".
Json to_json(const FrozenSearchResult& result, std::size_t k);

Json to_json(const VerificationReport& report);

/// Fixed-width human-readable table.
std::string render_table(const VerificationReport& report);

/// Two-space indent, trailing newline. Output is byte-stable.
std::string dump(const Json& j);

/// Graphviz export of R_k with nodes labelled by their colour strings.
std::string reconfig_to_dot(const ReconfigGraph& r);

}  // namespace colreconf
