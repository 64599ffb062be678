#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "colreconf/colouring.hpp"

namespace colreconf {

/// Fixed-width base-k encoding of colour assignments over n vertices.
///
/// Colour c at vertex i contributes (c - 1) * k^(i mod d) to word i / d, where
/// d is the largest digit count with k^d < 2^64. Equal assignments encode to
/// equal keys, so keys can stand in for colourings in hash sets.
class ColouringCodec {
public:
    using Key = std::vector<std::uint64_t>;

    ColouringCodec(std::size_t n, std::size_t k);

    std::size_t words() const noexcept { return words_; }

    Key encode(std::span<const Colour> assignment) const;
    std::vector<Colour> decode(const Key& key) const;

    /// Key with vertex v's digit set to zero: the bucket of all assignments
    /// that agree with this one away from v.
    Key erase(Key key, Vertex v, Colour c) const;

private:
    std::size_t n_;
    std::uint64_t k_;
    std::size_t digits_per_word_;
    std::size_t words_;
    std::vector<std::uint64_t> place_;
};

struct KeyHash {
    std::size_t operator()(const ColouringCodec::Key& key) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : key) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace colreconf
