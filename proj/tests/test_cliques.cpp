#include <doctest.h>

#include <random>

#include "colreconf/cliques.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/error.hpp"
#include "oracles.hpp"

using namespace colreconf;

TEST_CASE("clique number examples") {
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle(16)) == 2);
    CHECK(clique_number(edgeless_graph(4)) == 1);
    CHECK(clique_number(Graph(0)) == 0);

    const Graph h = power(cycle(16), 4);
    CHECK(oracle::clique_number(h) == 5);
    CHECK(clique_number(h) == 5);
    auto q = maximum_clique(h);
    REQUIRE(q.size() == 5);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) CHECK(h.adjacent(q[i], q[j]));
}

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(edgeless_graph(3)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);

    const Graph h = power(cycle(16), 4);
    CHECK(oracle::chromatic_number(h) == 6);
    CHECK(chromatic_number(h) == 6);

    const Graph g = build_base().graph;
    CHECK(oracle::chromatic_number(g) == 7);
    CHECK(chromatic_number(g) == 7);
    CHECK(is_colourable(g, 7));
    CHECK_FALSE(is_colourable(g, 6));
}

TEST_CASE("search cap is enforced") {
    Limits tight;
    tight.search_cap = 10;
    CHECK_THROWS_AS(clique_number(cycle(11), tight), ResourceError);
    CHECK_THROWS_AS(chromatic_number(cycle(11), tight), ResourceError);
    CHECK(chromatic_number(cycle(10), tight) == 2);
}

TEST_CASE("exact values agree with brute force on random graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        Graph g = oracle::random_graph(rng, n, 0.15 + 0.7 * (rng() % 100) / 100.0);
        const auto omega = clique_number(g);
        const auto chi = chromatic_number(g);
        CHECK(omega == oracle::clique_number(g));
        CHECK(chi == oracle::chromatic_number(g));
        CHECK(chi >= omega);
    }
}

TEST_CASE("bipartite and complete graphs are perfect") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(chromatic_number(complete_graph(n)) == clique_number(complete_graph(n)));
        if (n >= 2) {
            Graph kn = join(edgeless_graph(n), edgeless_graph(n));
            CHECK(chromatic_number(kn) == 2);
            CHECK(clique_number(kn) == 2);
        }
    }
}
