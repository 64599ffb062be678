#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colreconf/graph.hpp"
#include "colreconf/limits.hpp"

namespace colreconf {

using Colour = std::uint16_t;

/// Total map vertex -> {1..k}. Colours are 1-based throughout.
class Colouring {
public:
    /// Throws InputError if k == 0 or an entry falls outside 1..k.
    Colouring(std::vector<Colour> assignment, std::size_t k);

    std::size_t palette() const noexcept { return k_; }
    std::size_t size() const noexcept { return assignment_.size(); }
    std::span<const Colour> assignment() const noexcept { return assignment_; }
    Colour operator[](Vertex v) const noexcept { return assignment_[v]; }

    /// Copy with vertex v recoloured to c.
    Colouring recoloured(Vertex v, Colour c) const;

    /// Same assignment over a palette of k colours.
    Colouring with_palette(std::size_t k) const;

    /// Applies a relabelling: colour c becomes perm[c - 1].
    Colouring permuted(std::span<const Colour> perm) const;

    /// Digits-only when k <= 9 ("1234572345123467"), space-separated otherwise.
    std::string to_string() const;

    /// Parses the compact text form. Space-separated colours are always
    /// accepted; a single run of digits is split per character when k <= 9.
    static Colouring parse(std::string_view text, std::size_t k);

    friend bool operator==(const Colouring&, const Colouring&) = default;
    friend auto operator<=>(const Colouring& a, const Colouring& b) {
        if (auto c = a.assignment_ <=> b.assignment_; c != 0) return c;
        return a.k_ <=> b.k_;
    }

private:
    std::vector<Colour> assignment_;
    std::size_t k_;
};

/// No edge of g is monochromatic. Throws InputError on a length mismatch.
bool is_proper(const Graph& g, const Colouring& c);

/// Every vertex sees all c.palette() colours in its closed neighbourhood.
/// Throws InputError if c is not a proper colouring of g.
bool is_frozen(const Graph& g, const Colouring& c);

/// Lazily yields every proper k-colouring of g in lexicographic order.
///
/// Backtracking over vertices 0..n-1 with colours tried in increasing order;
/// partial assignments with a monochromatic edge are cut immediately. Every
/// colour placement attempt counts against limits.enumeration_cap and
/// next() throws ResourceError once it is exceeded.
class ColouringEnumerator {
public:
    ColouringEnumerator(const Graph& g, std::size_t k, const Limits& limits = {});

    std::optional<Colouring> next();

    std::uint64_t attempts() const noexcept { return attempts_; }

private:
    bool advance();

    std::vector<std::vector<Vertex>> earlier_;
    std::size_t k_;
    std::uint64_t cap_;
    std::uint64_t attempts_ = 0;
    std::vector<Colour> current_;
    std::size_t depth_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// All proper k-colourings, collected. See ColouringEnumerator.
std::vector<Colouring> enumerate_colourings(const Graph& g, std::size_t k,
                                            const Limits& limits = {});

/// Largest graph accepted by count_colourings.
inline constexpr std::size_t kCountColouringsMaxVertices = 12;

/// Number of proper k-colourings, from the chromatic polynomial evaluated at
/// k by deletion-contraction. Throws ResourceError above 12 vertices or when
/// k^n does not fit in 64 bits.
std::uint64_t count_colourings(const Graph& g, std::size_t k);

}  // namespace colreconf
