#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "colreconf/cliques.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/error.hpp"
#include "colreconf/patterns.hpp"
#include "colreconf/serialization.hpp"
#include "oracles.hpp"

using namespace colreconf;

TEST_CASE("base colourings match the drawing labels") {
    const auto inst = build_base();
    REQUIRE(inst.alpha.size() == 16);
    for (Vertex v = 0; v < 16; ++v) {
        CHECK(inst.alpha[v] == oracle::figure_alpha[v]);
        CHECK(inst.beta[v] == oracle::figure_beta[v]);
    }
    CHECK(inst.alpha[5] == 7);
    CHECK(inst.beta[5] == 6);
    CHECK(inst.alpha.palette() == 7);
    CHECK(inst.beta.palette() == 8);
}

TEST_CASE("base graph equals the drawn graph") {
    const auto g = build_base().graph;
    CHECK(g == oracle::figure_graph());
    CHECK(g.edge_count() == 100);
    CHECK_FALSE(g.adjacent(0, 8));
    CHECK(g.adjacent(0, 5));
}

TEST_CASE("edge rule is exact") {
    const auto inst = build_base();
    const Graph h = power(cycle(16), 4);
    for (const auto& e : h.edges()) CHECK(inst.graph.adjacent(e.u, e.v));
    for (Vertex u = 0; u < 16; ++u)
        for (Vertex v = u + 1; v < 16; ++v) {
            if (h.adjacent(u, v)) continue;
            const bool rule = inst.alpha[u] != inst.alpha[v] && inst.beta[u] != inst.beta[v];
            CHECK(inst.graph.adjacent(u, v) == rule);
        }
}

TEST_CASE("base instance claims") {
    const auto inst = build_base();
    CHECK(is_proper(inst.graph, inst.alpha));
    CHECK(is_proper(inst.graph, inst.beta));
    CHECK(is_frozen(inst.graph, inst.beta));
    CHECK_FALSE(find_induced(inst.graph, TwoK2Pattern{}));
    CHECK(chromatic_number(inst.graph) == 7);
    // Derived constant, not stated in the source construction.
    CHECK(clique_number(inst.graph) == 7);
}

TEST_CASE("family") {
    CHECK_THROWS_AS(build_family(0), InputError);
    CHECK_THROWS_AS(build_family(kMaxCopies + 1), ResourceError);

    const auto one = build_family(1);
    const auto base = build_base();
    CHECK(one.graph == base.graph);
    CHECK(one.alpha == base.alpha);
    CHECK(one.beta == base.beta);

    const auto two = build_family(2);
    CHECK(two.graph.vertex_count() == 32);
    CHECK(two.graph.edge_count() == 2 * base.graph.edge_count() + 256);
    CHECK(two.graph == join(base.graph, base.graph));
    CHECK(two.beta.palette() == 16);
    CHECK(two.alpha.palette() == 14);
    CHECK(two.alpha[16] == 1 + 7);
    CHECK(two.beta[31] == 8 + 8);
    CHECK(is_frozen(two.graph, two.beta));
    CHECK_FALSE(find_induced(two.graph, TwoK2Pattern{}));

    for (std::size_t p = 1; p <= 3; ++p) {
        const auto inst = build_family(p);
        CHECK(inst.graph.vertex_count() == 16 * p);
        CHECK(is_proper(inst.graph, inst.alpha));
        CHECK(is_frozen(inst.graph, inst.beta));
    }
}

TEST_CASE("verify the base instance") {
    const auto report = verify(build_base());
    CHECK(report.passed());
    const std::vector<std::string> names = {"alpha_proper", "beta_proper", "beta_frozen",     "two_k2_free",
                                            "p5_free",      "chromatic_number", "not_mixing_witness"};
    REQUIRE(report.checks.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(report.checks[i].name == names[i]);
        CHECK(report.checks[i].status == CheckStatus::pass);
    }
    CHECK(report.find("chromatic_number")->observed == "7");
    CHECK(report.vertices == 16);
    CHECK(report.edges == 100);
}

TEST_CASE("verify the two-copy instance") {
    const auto report = verify(build_family(2));
    CHECK(report.passed());
    CHECK(report.find("beta_frozen")->status == CheckStatus::pass);
    CHECK(report.find("two_k2_free")->status == CheckStatus::pass);
    CHECK(report.find("chromatic_upper")->status == CheckStatus::pass);
    CHECK(report.find("chromatic_lower")->status == CheckStatus::pass);
    CHECK(report.find("chromatic_lower")->observed == "clique of size 14");
    const auto* chi = report.find("chromatic_number");
    REQUIRE(chi);
    CHECK(chi->status == CheckStatus::skipped);
    CHECK(chi->note.find("derived from join additivity") != std::string::npos);
}

TEST_CASE("verify beyond the search cap reports skips, not passes") {
    Limits tight;
    tight.search_cap = 20;
    const auto report = verify(build_family(2), tight);
    CHECK(report.find("chromatic_lower")->status == CheckStatus::skipped);
    CHECK(report.find("chromatic_number")->status == CheckStatus::skipped);
    CHECK(report.passed());
    const auto base = verify(build_base(), Limits{1'000'000, 10'000'000, 8, 10'000'000});
    CHECK(base.find("chromatic_number")->status == CheckStatus::skipped);
}

TEST_CASE("verify flags a damaged instance without throwing") {
    const auto base = build_base();
    std::mt19937_64 rng(43);
    auto edges = base.graph.edges();
    for (int trial = 0; trial < 10; ++trial) {
        auto damaged = edges;
        damaged.erase(damaged.begin() + static_cast<std::ptrdiff_t>(rng() % damaged.size()));
        PaperInstance inst{1, Graph(16, damaged), base.alpha, base.beta};
        const auto report = verify(inst);
        CHECK(report.checks.size() == 7);
        // Removing an edge can only break frozenness or freeness; record, don't assert.
        for (const auto& c : report.checks)
            CHECK((c.status == CheckStatus::pass || c.status == CheckStatus::fail));
    }

    PaperInstance wrong{1, base.graph, base.alpha, Colouring(std::vector<Colour>(16, 1), 8)};
    const auto report = verify(wrong);
    CHECK_FALSE(report.passed());
    CHECK(report.find("beta_proper")->status == CheckStatus::fail);
    CHECK(report.find("not_mixing_witness")->status == CheckStatus::fail);

    PaperInstance short_alpha{1, base.graph, Colouring({1, 2}, 7), base.beta};
    const auto r2 = verify(short_alpha);
    CHECK(r2.find("alpha_proper")->status == CheckStatus::fail);
    CHECK(r2.find("alpha_proper")->observed.rfind("error:", 0) == 0);
}

TEST_CASE("bundle matches the committed golden file") {
    std::ifstream in(std::string(COLRECONF_DATA_DIR) + "/paper_instance_p1.json", std::ios::binary);
    REQUIRE(in);
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(dump(to_json(build_base())) == golden.str());

    const auto back = instance_from_json(Json::parse(golden.str()));
    CHECK(back.copies == 1);
    CHECK(back.graph == build_base().graph);
    CHECK(back.alpha == build_base().alpha);
    CHECK(back.beta == build_base().beta);
}

TEST_CASE("report serialization") {
    const auto report = verify(build_base());
    const auto j = to_json(report);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 7);
    CHECK(j["checks"][5]["name"] == "chromatic_number");
    const auto table = render_table(report);
    CHECK(table.find("overall: PASS") != std::string::npos);
    CHECK(dump(to_json(verify(build_base()))) == dump(j));
}
