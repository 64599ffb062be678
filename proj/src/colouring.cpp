#include "colreconf/colouring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>

#include "colreconf/error.hpp"

namespace colreconf {

Colouring::Colouring(std::vector<Colour> assignment, std::size_t k)
    : assignment_(std::move(assignment)), k_(k) {
    if (k_ == 0) throw InputError("palette size must be positive");
    if (k_ > std::numeric_limits<Colour>::max())
        throw InputError("palette size " + std::to_string(k_) + " is too large");
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        if (assignment_[v] < 1 || assignment_[v] > k_)
            throw InputError("vertex " + std::to_string(v) + " has colour " +
                             std::to_string(assignment_[v]) + " outside 1.." + std::to_string(k_));
    }
}

Colouring Colouring::recoloured(Vertex v, Colour c) const {
    auto a = assignment_;
    a.at(v) = c;
    return Colouring(std::move(a), k_);
}

Colouring Colouring::with_palette(std::size_t k) const { return Colouring(assignment_, k); }

Colouring Colouring::permuted(std::span<const Colour> perm) const {
    if (perm.size() != k_) throw InputError("permutation size must equal the palette size");
    auto a = assignment_;
    for (auto& c : a) c = perm[c - 1];
    return Colouring(std::move(a), k_);
}

std::string Colouring::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        if (k_ > 9 && i != 0) s += ' ';
        s += std::to_string(assignment_[i]);
    }
    return s;
}

Colouring Colouring::parse(std::string_view text, std::size_t k) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    std::vector<Colour> assignment;
    auto bad = [&](std::string_view tok) {
        return InputError("invalid colour '" + std::string(tok) + "' in colouring text");
    };
    if (tokens.size() == 1 && k <= 9 && tokens[0].size() > 1) {
        for (char ch : tokens[0]) {
            if (ch < '0' || ch > '9') throw bad(tokens[0]);
            assignment.push_back(static_cast<Colour>(ch - '0'));
        }
    } else {
        for (auto tok : tokens) {
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
                value > std::numeric_limits<Colour>::max())
                throw bad(tok);
            assignment.push_back(static_cast<Colour>(value));
        }
    }
    return Colouring(std::move(assignment), k);
}

namespace {

void check_length(const Graph& g, const Colouring& c) {
    if (c.size() != g.vertex_count())
        throw InputError("colouring has " + std::to_string(c.size()) + " entries but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

bool is_proper(const Graph& g, const Colouring& c) {
    check_length(g, c);
    for (const auto& e : g.edges())
        if (c[e.u] == c[e.v]) return false;
    return true;
}

bool is_frozen(const Graph& g, const Colouring& c) {
    if (!is_proper(g, c)) throw InputError("frozenness is only defined for proper colourings");
    const std::size_t k = c.palette();
    std::vector<std::size_t> stamp(k + 1, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        // Closed neighbourhood smaller than the palette can never see every colour.
        if (g.degree(v) + 1 < k) return false;
        std::size_t seen = 0;
        auto mark = [&](Vertex u) {
            if (stamp[c[u]] != v + 1) {
                stamp[c[u]] = v + 1;
                ++seen;
            }
        };
        mark(v);
        g.neighbours(v).for_each(mark);
        if (seen != k) return false;
    }
    return true;
}

ColouringEnumerator::ColouringEnumerator(const Graph& g, std::size_t k, const Limits& limits)
    : earlier_(g.vertex_count()), k_(k), cap_(limits.enumeration_cap),
      current_(g.vertex_count(), 0) {
    if (k == 0) throw InputError("palette size must be positive");
    if (k > std::numeric_limits<Colour>::max())
        throw InputError("palette size " + std::to_string(k) + " is too large");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u = g.neighbours(v).first(); u < v; u = g.neighbours(v).next(u + 1))
            earlier_[v].push_back(u);
}

bool ColouringEnumerator::advance() {
    const std::size_t n = current_.size();
    // Invariant: current_[0..depth_) is a proper partial colouring; current_[depth_]
    // holds the last colour tried at depth_ (0 = none yet).
    while (true) {
        Colour& slot = current_[depth_];
        bool placed = false;
        while (slot < k_) {
            ++slot;
            if (++attempts_ > cap_)
                throw ResourceError("colouring enumeration exceeded the cap of " +
                                    std::to_string(cap_) + " candidate assignments");
            bool clash = false;
            for (Vertex u : earlier_[depth_])
                if (current_[u] == slot) {
                    clash = true;
                    break;
                }
            if (!clash) {
                placed = true;
                break;
            }
        }
        if (placed) {
            if (depth_ + 1 == n) return true;
            ++depth_;
            current_[depth_] = 0;
        } else {
            slot = 0;
            if (depth_ == 0) return false;
            --depth_;
        }
    }
}

std::optional<Colouring> ColouringEnumerator::next() {
    if (done_) return std::nullopt;
    if (current_.empty()) {
        // The empty graph has exactly one (empty) colouring.
        done_ = true;
        return Colouring({}, k_);
    }
    if (!started_) {
        started_ = true;
        depth_ = 0;
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Colouring(current_, k_);
}

std::vector<Colouring> enumerate_colourings(const Graph& g, std::size_t k, const Limits& limits) {
    std::vector<Colouring> out;
    ColouringEnumerator it(g, k, limits);
    while (auto c = it.next()) out.push_back(std::move(*c));
    return out;
}

namespace {

// Chromatic polynomial evaluated at a fixed k. Arithmetic is modulo 2^64; the
// caller guarantees the final value fits, so intermediate wrap-around cancels.
class ChromaticPolynomial {
public:
    using Masks = std::array<std::uint16_t, kCountColouringsMaxVertices>;

    explicit ChromaticPolynomial(std::uint64_t k) : k_(k) {}

    std::uint64_t evaluate(Masks adj, std::size_t n) {
        std::uint64_t factor = 1;
        // Isolated vertices contribute an independent factor of k.
        for (std::size_t v = n; v-- > 0;) {
            if (adj[v] == 0) {
                factor *= k_;
                remove_vertex(adj, n, v);
                --n;
            }
        }
        return factor * reduced(adj, n);
    }

private:
    static void remove_vertex(Masks& adj, std::size_t n, std::size_t v) {
        for (std::size_t i = v; i + 1 < n; ++i) adj[i] = adj[i + 1];
        adj[n - 1] = 0;
        const std::uint16_t low = static_cast<std::uint16_t>((1U << v) - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::uint16_t m = adj[i];
            adj[i] = static_cast<std::uint16_t>((m & low) | ((m >> 1) & ~low));
        }
    }

    static std::size_t edge_count(const Masks& adj, std::size_t n) {
        std::size_t twice = 0;
        for (std::size_t v = 0; v < n; ++v) twice += static_cast<std::size_t>(std::popcount(adj[v]));
        return twice / 2;
    }

    // Merge v into u (u < v) and drop v.
    static Masks contract(Masks adj, std::size_t n, std::size_t u, std::size_t v) {
        const std::uint16_t merged =
            static_cast<std::uint16_t>((adj[u] | adj[v]) & ~((1U << u) | (1U << v)));
        for (std::size_t w = 0; w < n; ++w) {
            adj[w] = static_cast<std::uint16_t>(adj[w] & ~(1U << u));
            if (merged & (1U << w)) adj[w] = static_cast<std::uint16_t>(adj[w] | (1U << u));
        }
        adj[u] = merged;
        remove_vertex(adj, n, v);
        return adj;
    }

    std::uint64_t reduced(const Masks& adj, std::size_t n) {
        const std::size_t m = edge_count(adj, n);
        if (m == 0) return power(n);
        if (m == n * (n - 1) / 2) return falling(n);

        const auto key = std::make_pair(n, adj);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::uint64_t result = 0;
        if (2 * m > n * (n - 1) / 2) {
            // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
            auto [u, v] = first_pair(adj, n, false);
            Masks added = adj;
            added[u] = static_cast<std::uint16_t>(added[u] | (1U << v));
            added[v] = static_cast<std::uint16_t>(added[v] | (1U << u));
            result = evaluate(added, n) + evaluate(contract(adj, n, u, v), n - 1);
        } else {
            // Sparse: P(G) = P(G - uv) - P(G / uv) for an edge uv.
            auto [u, v] = first_pair(adj, n, true);
            Masks removed = adj;
            removed[u] = static_cast<std::uint16_t>(removed[u] & ~(1U << v));
            removed[v] = static_cast<std::uint16_t>(removed[v] & ~(1U << u));
            result = evaluate(removed, n) - evaluate(contract(adj, n, u, v), n - 1);
        }
        memo_.emplace(key, result);
        return result;
    }

    static std::pair<std::size_t, std::size_t> first_pair(const Masks& adj, std::size_t n,
                                                          bool want_edge) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (static_cast<bool>(adj[u] & (1U << v)) == want_edge) return {u, v};
        return {0, 0};
    }

    std::uint64_t power(std::size_t n) const {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < n; ++i) r *= k_;
        return r;
    }

    std::uint64_t falling(std::size_t n) const {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (k_ < i) return 0;
            r *= k_ - i;
        }
        return r;
    }

    std::uint64_t k_;
    std::map<std::pair<std::size_t, Masks>, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t count_colourings(const Graph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    if (n > kCountColouringsMaxVertices)
        throw ResourceError("count_colourings supports at most " +
                            std::to_string(kCountColouringsMaxVertices) + " vertices, got " +
                            std::to_string(n));
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (k != 0 && bound > std::numeric_limits<std::uint64_t>::max() / k)
            throw ResourceError("k^n exceeds 64 bits; colouring count may overflow");
        bound *= k;
    }
    ChromaticPolynomial::Masks adj{};
    for (Vertex v = 0; v < n; ++v)
        g.neighbours(v).for_each([&](Vertex w) { adj[v] = static_cast<std::uint16_t>(adj[v] | (1U << w)); });
    return ChromaticPolynomial(k).evaluate(adj, n);
}

}  // namespace colreconf
