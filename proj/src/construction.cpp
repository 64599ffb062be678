#include "colreconf/construction.hpp"

#include <functional>
#include <future>
#include <string>

#include "colreconf/cliques.hpp"
#include "colreconf/error.hpp"
#include "colreconf/patterns.hpp"

namespace colreconf {
namespace {

Colouring shifted_copies(std::string_view digits, std::size_t block, std::size_t p) {
    std::vector<Colour> a;
    a.reserve(digits.size() * p);
    for (std::size_t j = 0; j < p; ++j)
        for (char ch : digits) a.push_back(static_cast<Colour>((ch - '0') + block * j));
    return Colouring(std::move(a), block * p);
}

std::string tuple_string(const std::vector<Vertex>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

CheckResult guarded(std::string name, std::string expected,
                    const std::function<CheckResult()>& body) {
    try {
        CheckResult r = body();
        r.name = std::move(name);
        r.expected = std::move(expected);
        return r;
    } catch (const std::exception& e) {
        return {std::move(name), std::move(expected), std::string("error: ") + e.what(),
                CheckStatus::fail, ""};
    }
}

CheckResult outcome(bool ok, std::string observed, std::string note = "") {
    return {"", "", std::move(observed), ok ? CheckStatus::pass : CheckStatus::fail,
            std::move(note)};
}

}  // namespace

Graph close_under_distinct_colours(const Graph& h, const Colouring& alpha, const Colouring& beta) {
    const auto n = static_cast<Vertex>(h.vertex_count());
    if (alpha.size() != n || beta.size() != n)
        throw InputError("colourings must cover every vertex of the graph");
    std::vector<Edge> edges = h.edges();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v) && alpha[u] != alpha[v] && beta[u] != beta[v])
                edges.push_back({u, v});
    return Graph(n, edges);
}

PaperInstance build_base() {
    Colouring alpha = shifted_copies(kBaseAlpha, kAlphaColours, 1);
    Colouring beta = shifted_copies(kBaseBeta, kBetaColours, 1);
    Graph h = power(cycle(kBaseOrder), kBaseCyclePower);
    Graph g = close_under_distinct_colours(h, alpha, beta);
    return {1, std::move(g), std::move(alpha), std::move(beta)};
}

PaperInstance build_family(std::size_t p) {
    if (p == 0) throw InputError("copy count must be at least 1");
    if (p > kMaxCopies)
        throw ResourceError("copy count " + std::to_string(p) + " exceeds the cap of " +
                            std::to_string(kMaxCopies));
    PaperInstance base = build_base();
    Graph g = base.graph;
    for (std::size_t j = 1; j < p; ++j) g = join(g, base.graph);
    return {p, std::move(g), shifted_copies(kBaseAlpha, kAlphaColours, p),
            shifted_copies(kBaseBeta, kBetaColours, p)};
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerificationReport verify(const PaperInstance& instance, const Limits& limits) {
    const Graph& g = instance.graph;
    const std::size_t p = instance.copies;
    const std::size_t alpha_k = kAlphaColours * p;
    const std::size_t beta_k = kBetaColours * p;
    const std::string alpha_ks = std::to_string(alpha_k);
    const std::string beta_ks = std::to_string(beta_k);

    using Task = std::function<CheckResult()>;
    std::vector<std::pair<std::pair<std::string, std::string>, Task>> tasks;

    tasks.push_back({{"alpha_proper", "proper, " + alpha_ks + " colours"}, [&] {
                         const bool proper = is_proper(g, instance.alpha);
                         const bool palette = instance.alpha.palette() == alpha_k;
                         return outcome(proper && palette,
                                        std::string(proper ? "proper" : "improper") + ", " +
                                            std::to_string(instance.alpha.palette()) + " colours");
                     }});
    tasks.push_back({{"beta_proper", "proper, " + beta_ks + " colours"}, [&] {
                         const bool proper = is_proper(g, instance.beta);
                         const bool palette = instance.beta.palette() == beta_k;
                         return outcome(proper && palette,
                                        std::string(proper ? "proper" : "improper") + ", " +
                                            std::to_string(instance.beta.palette()) + " colours");
                     }});
    tasks.push_back({{"beta_frozen", "frozen with k=" + beta_ks}, [&] {
                         if (!is_proper(g, instance.beta))
                             return outcome(false, "not frozen: beta is improper");
                         const bool frozen = is_frozen(g, instance.beta.with_palette(beta_k));
                         return outcome(frozen, frozen ? "frozen with k=" + beta_ks
                                                       : "not frozen with k=" + beta_ks);
                     }});
    tasks.push_back({{"two_k2_free", "none"}, [&] {
                         auto w = find_induced(g, TwoK2Pattern{});
                         return outcome(!w, w ? "induced 2K2 at " + tuple_string(*w) : "none");
                     }});
    tasks.push_back({{"p5_free", "none"}, [&] {
                         auto w = find_induced(g, PathPattern{5});
                         return outcome(!w, w ? "induced P5 at " + tuple_string(*w) : "none");
                     }});

    if (p == 1) {
        tasks.push_back({{"chromatic_number", alpha_ks}, [&] {
                             if (g.vertex_count() > limits.search_cap)
                                 return CheckResult{"", "", "not computed", CheckStatus::skipped,
                                                    "graph exceeds the search cap"};
                             const auto chi = chromatic_number(g, limits);
                             return outcome(chi == alpha_k, std::to_string(chi));
                         }});
    } else {
        tasks.push_back({{"chromatic_upper", "<= " + alpha_ks}, [&] {
                             const bool proper = is_proper(g, instance.alpha);
                             const bool ok = proper && instance.alpha.palette() <= alpha_k;
                             return outcome(ok, proper ? "alpha is a proper " +
                                                             std::to_string(instance.alpha.palette()) +
                                                             "-colouring"
                                                       : "alpha is improper");
                         }});
        tasks.push_back({{"chromatic_lower", ">= " + alpha_ks}, [&] {
                             if (g.vertex_count() > limits.search_cap)
                                 return CheckResult{"", "", "not computed", CheckStatus::skipped,
                                                    "skipped: derived from join additivity; graph "
                                                    "exceeds the search cap"};
                             const auto omega = clique_number(g, limits);
                             return outcome(omega >= alpha_k, "clique of size " + std::to_string(omega),
                                            "clique of the join");
                         }});
        tasks.push_back({{"chromatic_number", alpha_ks}, [&] {
                             // Exact search on the join is not run; the base graph's value
                             // times p gives chi by join additivity.
                             const auto base_chi = chromatic_number(build_base().graph, limits);
                             return CheckResult{"", "",
                                                std::to_string(p * base_chi) + " = " +
                                                    std::to_string(p) + " x " +
                                                    std::to_string(base_chi),
                                                CheckStatus::skipped,
                                                "skipped: derived from join additivity"};
                         }});
    }

    tasks.push_back({{"not_mixing_witness",
                      "beta frozen and a second proper " + beta_ks + "-colouring exists"},
                     [&] {
                         if (!is_proper(g, instance.beta))
                             return outcome(false, "beta is improper");
                         const Colouring beta = instance.beta.with_palette(beta_k);
                         const bool frozen = is_frozen(g, beta);
                         const Colouring other = instance.alpha.with_palette(beta_k);
                         const bool second = is_proper(g, other) && other != beta;
                         std::string observed = frozen ? "beta frozen" : "beta not frozen";
                         observed += second ? "; alpha is a distinct proper " + beta_ks + "-colouring"
                                            : "; no second colouring certified";
                         return outcome(frozen && second, std::move(observed));
                     }});

    std::vector<std::future<CheckResult>> futures;
    futures.reserve(tasks.size());
    for (auto& [labels, body] : tasks) {
        futures.push_back(std::async(std::launch::async, [&labels = labels, &body = body] {
            return guarded(labels.first, labels.second, body);
        }));
    }

    VerificationReport report;
    report.copies = p;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    for (auto& f : futures) report.checks.push_back(f.get());
    return report;
}

}  // namespace colreconf
