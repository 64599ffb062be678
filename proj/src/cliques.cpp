#include "colreconf/cliques.hpp"

#include <algorithm>
#include <string>

#include "colreconf/error.hpp"

namespace colreconf {
namespace {

void check_cap(const Graph& g, const Limits& limits, const char* what) {
    if (g.vertex_count() > limits.search_cap)
        throw ResourceError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                            " vertices, above the search cap of " +
                            std::to_string(limits.search_cap));
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run() {
        const auto n = g_.vertex_count();
        best_.clear();
        current_.clear();
        if (n == 0) return best_;
        expand(VertexSet::full(n));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy sequential colouring of `candidates`; order[i] is coloured bound[i],
    // with bound non-decreasing.
    void colour_sort(const VertexSet& candidates, std::vector<Vertex>& order,
                     std::vector<std::size_t>& bound) const {
        order.clear();
        bound.clear();
        VertexSet uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            VertexSet available = uncoloured;
            while (available.any()) {
                Vertex v = available.first();
                available.reset(v);
                available.subtract(g_.neighbours(v));
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(VertexSet candidates) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) return;
            const Vertex v = order[i];
            current_.push_back(v);
            VertexSet next = candidates & g_.neighbours(v);
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    const Graph& g_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

// DSATUR backtracking for a fixed palette size.
class Colourer {
public:
    Colourer(const Graph& g, std::size_t k)
        : g_(g), k_(k), adj_(g.adjacency_lists()), colour_(g.vertex_count(), 0),
          seen_(g.vertex_count() * (k + 1), 0), saturation_(g.vertex_count(), 0) {}

    bool run(const std::vector<Vertex>& clique) {
        if (clique.size() > k_) return false;
        std::size_t used = 0;
        for (Vertex v : clique) assign(v, ++used);
        return search(clique.size(), used);
    }

private:
    void assign(Vertex v, std::size_t c) {
        colour_[v] = c;
        for (Vertex w : adj_[v])
            if (seen_[w * (k_ + 1) + c]++ == 0) ++saturation_[w];
    }

    void unassign(Vertex v) {
        const std::size_t c = colour_[v];
        colour_[v] = 0;
        for (Vertex w : adj_[v])
            if (--seen_[w * (k_ + 1) + c] == 0) --saturation_[w];
    }

    bool search(std::size_t coloured, std::size_t used) {
        const auto n = g_.vertex_count();
        if (coloured == n) return true;
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (colour_[v] != 0) continue;
            if (!found || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
                pick = v;
                found = true;
            }
        }
        if (saturation_[pick] == k_) return false;
        // Colours above `used` are interchangeable; only try the first of them.
        const std::size_t top = std::min(k_, used + 1);
        for (std::size_t c = 1; c <= top; ++c) {
            if (seen_[pick * (k_ + 1) + c] != 0) continue;
            assign(pick, c);
            if (search(coloured + 1, std::max(used, c))) return true;
            unassign(pick);
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::size_t> colour_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::size_t> saturation_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g, const Limits& limits) {
    check_cap(g, limits, "clique number");
    return CliqueSearch(g).run();
}

std::size_t clique_number(const Graph& g, const Limits& limits) {
    return maximum_clique(g, limits).size();
}

bool is_colourable(const Graph& g, std::size_t k, const Limits& limits) {
    check_cap(g, limits, "colourability");
    if (g.vertex_count() == 0) return true;
    if (k == 0) return false;
    return Colourer(g, k).run(CliqueSearch(g).run());
}

std::size_t chromatic_number(const Graph& g, const Limits& limits) {
    check_cap(g, limits, "chromatic number");
    const auto clique = CliqueSearch(g).run();
    for (std::size_t k = clique.size();; ++k) {
        if (Colourer(g, k).run(clique)) return k;
    }
}

}  // namespace colreconf
