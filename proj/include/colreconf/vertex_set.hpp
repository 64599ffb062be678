#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace colreconf {

using Vertex = std::uint32_t;

/// Fixed-width bitset over the vertices 0..n-1 of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool test(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept { return next(0); }

    /// Smallest member >= from, or universe() when there is none.
    Vertex next(Vertex from) const noexcept {
        std::size_t wi = from >> 6;
        if (wi >= words_.size()) return static_cast<Vertex>(universe_);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size()) return static_cast<Vertex>(universe_);
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1)
                f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Removes every member of o.
    VertexSet& subtract(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() noexcept {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace colreconf
