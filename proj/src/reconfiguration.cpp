#include "colreconf/reconfiguration.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "colreconf/error.hpp"
#include "colreconf/packed_colouring.hpp"
#include "colreconf/union_find.hpp"

namespace colreconf {

ReconfigGraph::ReconfigGraph(Graph base, std::size_t k, std::vector<Colour> flat_nodes,
                             std::vector<NodeEdge> edges)
    : base_(std::move(base)), k_(k), flat_(std::move(flat_nodes)), edges_(std::move(edges)) {
    const std::size_t n = base_.vertex_count();
    // The graph with no vertices has exactly one (empty) colouring.
    node_count_ = n == 0 ? 1 : flat_.size() / n;
}

std::span<const Colour> ReconfigGraph::node_assignment(std::size_t i) const {
    const std::size_t n = base_.vertex_count();
    return std::span<const Colour>(flat_).subspan(i * n, n);
}

Colouring ReconfigGraph::node(std::size_t i) const {
    auto a = node_assignment(i);
    return Colouring(std::vector<Colour>(a.begin(), a.end()), k_);
}

std::vector<Colouring> ReconfigGraph::nodes() const {
    std::vector<Colouring> out;
    out.reserve(node_count_);
    for (std::size_t i = 0; i < node_count_; ++i) out.push_back(node(i));
    return out;
}

std::vector<std::size_t> ReconfigGraph::degrees() const {
    std::vector<std::size_t> d(node_count_, 0);
    for (auto [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d;
}

std::vector<std::size_t> ReconfigGraph::isolated_nodes() const {
    std::vector<std::size_t> out;
    auto d = degrees();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] == 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> ReconfigGraph::component_labels() const {
    UnionFind uf(node_count_);
    for (auto [a, b] : edges_) uf.unite(a, b);
    return uf.labels();
}

std::size_t ReconfigGraph::component_count() const {
    UnionFind uf(node_count_);
    for (auto [a, b] : edges_) uf.unite(a, b);
    return uf.component_count();
}

ReconfigGraph build_reconfig(const Graph& g, std::size_t k, const Limits& limits) {
    const std::size_t n = g.vertex_count();
    std::vector<Colour> flat;
    std::size_t count = 0;
    ColouringEnumerator it(g, k, limits);
    while (auto c = it.next()) {
        if (++count > limits.node_cap)
            throw ResourceError("reconfiguration graph has more than " +
                                std::to_string(limits.node_cap) +
                                " nodes (node cap); use the lazy operations instead");
        auto a = c->assignment();
        flat.insert(flat.end(), a.begin(), a.end());
    }

    std::vector<ReconfigGraph::NodeEdge> edges;
    if (n > 0 && count > 1) {
        const ColouringCodec codec(n, k);
        std::vector<ColouringCodec::Key> keys(count);
        for (std::size_t i = 0; i < count; ++i)
            keys[i] = codec.encode(std::span<const Colour>(flat).subspan(i * n, n));

        std::vector<ColouringCodec::Key> bucket(count);
        std::vector<std::size_t> order(count);
        for (Vertex v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < count; ++i) bucket[i] = codec.erase(keys[i], v, flat[i * n + v]);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return bucket[a] < bucket[b]; });
            // Every pair inside a bucket differs exactly at v.
            for (std::size_t lo = 0; lo < count;) {
                std::size_t hi = lo + 1;
                while (hi < count && bucket[order[hi]] == bucket[order[lo]]) ++hi;
                for (std::size_t x = lo; x < hi; ++x)
                    for (std::size_t y = x + 1; y < hi; ++y)
                        edges.emplace_back(std::min(order[x], order[y]), std::max(order[x], order[y]));
                lo = hi;
            }
        }
        std::sort(edges.begin(), edges.end());
    }
    return ReconfigGraph(g, k, std::move(flat), std::move(edges));
}

MixingVerdict is_mixing(const Graph& g, std::size_t k, const Limits& limits) {
    const ReconfigGraph r = build_reconfig(g, k, limits);
    MixingVerdict verdict;
    verdict.exhaustive = true;
    if (r.node_count() == 0) {
        verdict.connected = false;
        verdict.component_count = 0;
        return verdict;
    }
    UnionFind uf(r.node_count());
    for (auto [a, b] : r.edges()) uf.unite(a, b);
    verdict.component_count = uf.component_count();
    verdict.connected = uf.component_count() == 1;
    if (verdict.connected) return verdict;

    const auto isolated = r.isolated_nodes();
    if (!isolated.empty()) {
        verdict.frozen_witness = r.node(isolated.front());
        return verdict;
    }
    for (std::size_t i = 1; i < r.node_count(); ++i) {
        if (!uf.same(0, i)) {
            verdict.separated_pair = std::make_pair(r.node(0), r.node(i));
            break;
        }
    }
    return verdict;
}

NeighbourStream::NeighbourStream(const Graph& g, Colouring c) : g_(&g), c_(std::move(c)) {
    if (!is_proper(g, c_)) throw InputError("neighbours requires a proper colouring");
    blocked_.assign(c_.palette() + 1, false);
    if (g.vertex_count() > 0) {
        g.neighbours(0).for_each([&](Vertex u) { blocked_[c_[u]] = true; });
        blocked_[c_[0]] = true;
    }
}

std::optional<Colouring> NeighbourStream::next() {
    const auto n = g_->vertex_count();
    const std::size_t k = c_.palette();
    while (vertex_ < n) {
        while (colour_ < k) {
            ++colour_;
            if (!blocked_[colour_]) return c_.recoloured(vertex_, colour_);
        }
        ++vertex_;
        colour_ = 0;
        if (vertex_ < n) {
            std::fill(blocked_.begin(), blocked_.end(), false);
            g_->neighbours(vertex_).for_each([&](Vertex u) { blocked_[c_[u]] = true; });
            blocked_[c_[vertex_]] = true;
        }
    }
    return std::nullopt;
}

std::vector<Colouring> neighbours(const Graph& g, const Colouring& c) {
    std::vector<Colouring> out;
    NeighbourStream s(g, c);
    while (auto x = s.next()) out.push_back(std::move(*x));
    return out;
}

namespace {

struct Bfs {
    bool complete = false;
    std::vector<ColouringCodec::Key> visited;
};

Bfs explore(const Graph& g, const Colouring& start, std::uint64_t budget) {
    if (budget == 0) throw InputError("node budget must be positive");
    if (!is_proper(g, start)) throw InputError("component exploration requires a proper colouring");
    const ColouringCodec codec(g.vertex_count(), start.palette());
    std::unordered_set<ColouringCodec::Key, KeyHash> seen;
    std::deque<Colouring> frontier;
    Bfs result;

    auto visit = [&](const Colouring& c) {
        auto key = codec.encode(c.assignment());
        if (!seen.insert(key).second) return true;
        if (seen.size() > budget) return false;
        result.visited.push_back(std::move(key));
        frontier.push_back(c);
        return true;
    };

    visit(start);
    while (!frontier.empty()) {
        Colouring c = std::move(frontier.front());
        frontier.pop_front();
        NeighbourStream s(g, c);
        while (auto nb = s.next())
            if (!visit(*nb)) return result;
    }
    result.complete = true;
    return result;
}

}  // namespace

ComponentResult component_of(const Graph& g, const Colouring& c, std::uint64_t node_budget) {
    Bfs bfs = explore(g, c, node_budget);
    if (!bfs.complete) return BudgetExhausted{bfs.visited.size()};
    const std::size_t size = bfs.visited.size();
    return ExploredFully{size, size == 1};
}

std::optional<std::vector<Colouring>> component_members(const Graph& g, const Colouring& c,
                                                        std::uint64_t node_budget) {
    Bfs bfs = explore(g, c, node_budget);
    if (!bfs.complete) return std::nullopt;
    const ColouringCodec codec(g.vertex_count(), c.palette());
    std::vector<Colouring> out;
    out.reserve(bfs.visited.size());
    for (const auto& key : bfs.visited) out.emplace_back(codec.decode(key), c.palette());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class FrozenSearch {
public:
    FrozenSearch(const Graph& g, std::size_t k, std::size_t limit, std::uint64_t budget)
        : g_(g), k_(k), limit_(limit), budget_(budget), n_(g.vertex_count()),
          colour_(n_, 0), count_(n_ * (k + 1), 0), present_(n_, 0), unassigned_(n_, 0) {
        closed_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            closed_[v] = g.closed_neighbourhood(v).members();
            unassigned_[v] = closed_[v].size();
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    FrozenSearchResult run() {
        FrozenSearchResult result;
        aborted_ = false;
        bool feasible = true;
        for (Vertex v = 0; v < n_; ++v)
            if (unassigned_[v] < k_) feasible = false;
        if (feasible) descend(0);
        result.exhaustive = !aborted_;
        result.nodes_visited = visited_;
        std::sort(found_.begin(), found_.end());
        result.colourings = std::move(found_);
        return result;
    }

private:
    bool assign(Vertex v, Colour c) {
        colour_[v] = c;
        bool ok = true;
        for (Vertex w : closed_[v]) {
            if (count_[w * (k_ + 1) + c]++ == 0) ++present_[w];
            --unassigned_[w];
            if (k_ - present_[w] > unassigned_[w]) ok = false;
        }
        return ok;
    }

    void unassign(Vertex v) {
        const Colour c = colour_[v];
        colour_[v] = 0;
        for (Vertex w : closed_[v]) {
            if (--count_[w * (k_ + 1) + c] == 0) --present_[w];
            ++unassigned_[w];
        }
    }

    // Returns false when the search must stop (limit or budget).
    bool descend(std::size_t depth) {
        if (depth == n_) {
            found_.emplace_back(colour_, k_);
            if (found_.size() >= limit_) {
                aborted_ = true;
                return false;
            }
            return true;
        }
        const Vertex v = order_[depth];
        for (Colour c = 1; c <= k_; ++c) {
            if (++visited_ > budget_) {
                aborted_ = true;
                return false;
            }
            bool clash = false;
            g_.neighbours(v).for_each([&](Vertex u) {
                if (colour_[u] == c) clash = true;
            });
            if (clash) continue;
            const bool ok = assign(v, c);
            const bool go_on = !ok || descend(depth + 1);
            unassign(v);
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t limit_;
    std::uint64_t budget_;
    std::size_t n_;
    std::vector<Colour> colour_;
    std::vector<std::uint32_t> count_;
    std::vector<std::size_t> present_;
    std::vector<std::size_t> unassigned_;
    std::vector<std::vector<Vertex>> closed_;
    std::vector<Vertex> order_;
    std::vector<Colouring> found_;
    std::uint64_t visited_ = 0;
    bool aborted_ = false;
};

}  // namespace

FrozenSearchResult find_frozen(const Graph& g, std::size_t k, std::size_t limit,
                               const Limits& limits) {
    if (k == 0) throw InputError("palette size must be positive");
    if (k > std::numeric_limits<Colour>::max())
        throw InputError("palette size " + std::to_string(k) + " is too large");
    if (limit == 0) throw InputError("frozen search limit must be positive");
    return FrozenSearch(g, k, limit, limits.lazy_budget).run();
}

}  // namespace colreconf
