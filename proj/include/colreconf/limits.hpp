#pragma once

#include <cstddef>
#include <cstdint>

namespace colreconf {

/// Caps and budgets shared by the exhaustive searches.
struct Limits {
    /// Maximum number of nodes of an explicitly built reconfiguration graph.
    std::uint64_t node_cap = 1'000'000;
    /// Node budget for lazy exploration (component BFS, frozen search).
    std::uint64_t lazy_budget = 10'000'000;
    /// Maximum vertex count for exact clique / chromatic number.
    std::size_t search_cap = 64;
    /// Maximum number of partial assignments tried while enumerating colourings.
    std::uint64_t enumeration_cap = 10'000'000;
};

/// Throws InputError unless every cap is positive.
void validate(const Limits& limits);

}  // namespace colreconf
