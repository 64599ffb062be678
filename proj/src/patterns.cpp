#include "colreconf/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "colreconf/error.hpp"

namespace colreconf {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class PathSearch {
public:
    PathSearch(const Graph& g, std::size_t length) : g_(g), length_(length) {}

    std::optional<std::vector<Vertex>> run() {
        const auto n = static_cast<Vertex>(g_.vertex_count());
        for (Vertex start = 0; start < n; ++start) {
            path_.assign(1, start);
            if (length_ == 1) return path_;
            // Vertices adjacent to some earlier path vertex other than the tip.
            VertexSet blocked(n);
            blocked.set(start);
            if (extend(blocked)) return path_;
        }
        return std::nullopt;
    }

private:
    // `blocked` = path vertices plus neighbours of all path vertices except the tip.
    bool extend(const VertexSet& blocked) {
        const Vertex tip = path_.back();
        VertexSet candidates = g_.neighbours(tip);
        candidates.subtract(blocked);
        const bool last = path_.size() + 1 == length_;
        for (Vertex next = candidates.first(); next < g_.vertex_count();
             next = candidates.next(next + 1)) {
            // Reversal symmetry: only report paths whose start is smaller than their end.
            if (last && next < path_.front()) continue;
            path_.push_back(next);
            if (last) return true;
            VertexSet deeper = blocked;
            deeper |= g_.neighbours(tip);
            deeper.set(next);
            if (extend(deeper)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::size_t length_;
    std::vector<Vertex> path_;
};

std::optional<std::vector<Vertex>> find_two_k2(const Graph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex a = 0; a < n; ++a) {
        const auto& na = g.neighbours(a);
        for (Vertex b = na.next(a + 1); b < n; b = na.next(b + 1)) {
            VertexSet far = VertexSet::full(n);
            far.subtract(g.closed_neighbourhood(a));
            far.subtract(g.closed_neighbourhood(b));
            for (Vertex c = far.next(a + 1); c < n; c = far.next(c + 1)) {
                VertexSet partners = g.neighbours(c) & far;
                Vertex d = partners.next(c + 1);
                if (d < n) return std::vector<Vertex>{a, b, c, d};
            }
        }
    }
    return std::nullopt;
}

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& g, const Graph& pattern) : g_(g), p_(pattern) {}

    std::optional<std::vector<Vertex>> run() {
        image_.clear();
        if (p_.vertex_count() == 0) return image_;
        VertexSet used(g_.vertex_count());
        if (place(used)) return image_;
        return std::nullopt;
    }

private:
    bool place(VertexSet& used) {
        const auto i = static_cast<Vertex>(image_.size());
        VertexSet candidates = VertexSet::full(g_.vertex_count());
        candidates.subtract(used);
        for (Vertex j = 0; j < i; ++j) {
            if (p_.adjacent(i, j))
                candidates &= g_.neighbours(image_[j]);
            else
                candidates.subtract(g_.neighbours(image_[j]));
        }
        for (Vertex x = candidates.first(); x < g_.vertex_count(); x = candidates.next(x + 1)) {
            image_.push_back(x);
            if (image_.size() == p_.vertex_count()) return true;
            used.set(x);
            if (place(used)) return true;
            used.reset(x);
            image_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    const Graph& p_;
    std::vector<Vertex> image_;
};

}  // namespace

std::size_t pattern_order(const Pattern& pattern) {
    return std::visit(overloaded{[](const PathPattern& p) { return p.length; },
                                 [](const TwoK2Pattern&) { return std::size_t{4}; },
                                 [](const CustomPattern& c) { return c.pattern.vertex_count(); }},
                      pattern);
}

Graph pattern_graph(const Pattern& pattern) {
    return std::visit(overloaded{[](const PathPattern& p) { return path_graph(p.length); },
                                 [](const TwoK2Pattern&) {
                                     const Edge e[] = {{0, 1}, {2, 3}};
                                     return Graph(4, e);
                                 },
                                 [](const CustomPattern& c) { return c.pattern; }},
                      pattern);
}

std::string pattern_name(const Pattern& pattern) {
    return std::visit(
        overloaded{[](const PathPattern& p) { return "P" + std::to_string(p.length); },
                   [](const TwoK2Pattern&) { return std::string("2K2"); },
                   [](const CustomPattern& c) {
                       return "custom(" + std::to_string(c.pattern.vertex_count()) + " vertices)";
                   }},
        pattern);
}

Pattern parse_pattern(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "2k2") return TwoK2Pattern{};
    if (lower.size() >= 2 && lower[0] == 'p') {
        std::size_t t = 0;
        auto [ptr, ec] = std::from_chars(lower.data() + 1, lower.data() + lower.size(), t);
        if (ec == std::errc{} && ptr == lower.data() + lower.size() && t >= 1)
            return PathPattern{t};
    }
    throw InputError("unknown pattern '" + std::string(text) + "' (expected 2k2 or P<t>, t >= 1)");
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Pattern& pattern) {
    if (const auto* p = std::get_if<PathPattern>(&pattern); p && p->length == 0)
        throw InputError("path pattern needs at least one vertex");
    if (pattern_order(pattern) > g.vertex_count())
        throw InputError("pattern " + pattern_name(pattern) + " has more vertices than the graph (" +
                         std::to_string(g.vertex_count()) + ")");
    return std::visit(
        overloaded{[&](const PathPattern& p) { return PathSearch(g, p.length).run(); },
                   [&](const TwoK2Pattern&) { return find_two_k2(g); },
                   [&](const CustomPattern& c) { return EmbeddingSearch(g, c.pattern).run(); }},
        pattern);
}

bool induces(const Graph& g, const Pattern& pattern, const std::vector<Vertex>& witness) {
    const Graph p = pattern_graph(pattern);
    if (witness.size() != p.vertex_count()) return false;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (witness[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            if (witness[i] == witness[j]) return false;
            if (g.adjacent(witness[i], witness[j]) !=
                p.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                return false;
        }
    }
    return true;
}

}  // namespace colreconf
