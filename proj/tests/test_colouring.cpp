#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "colreconf/colouring.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/error.hpp"
#include "colreconf/reconfiguration.hpp"
#include "colreconf/serialization.hpp"
#include "oracles.hpp"

using namespace colreconf;

namespace {

Colouring col(std::string_view s, std::size_t k) { return Colouring::parse(s, k); }

}  // namespace

TEST_CASE("colouring values") {
    CHECK_THROWS_AS(Colouring({1, 0}, 2), InputError);
    CHECK_THROWS_AS(Colouring({1, 3}, 2), InputError);
    CHECK_THROWS_AS(Colouring({1}, 0), InputError);

    auto a = col("1234572345123467", 7);
    CHECK(a.size() == 16);
    CHECK(a[5] == 7);
    CHECK(a.to_string() == "1234572345123467");
    CHECK(col("1 2 3", 3) == Colouring({1, 2, 3}, 3));
    CHECK(col("10 2", 10).to_string() == "10 2");
    CHECK(col("7", 9) == Colouring({7}, 9));
    CHECK(col("12", 12) == Colouring({12}, 12));
    CHECK_THROWS_AS(col("1a", 3), InputError);
    CHECK_THROWS_AS(col("14", 3), InputError);
    CHECK(Colouring({1, 2}, 2) < Colouring({2, 1}, 2));
}

TEST_CASE("is_proper") {
    const auto inst = build_base();
    CHECK(is_proper(inst.graph, inst.alpha));
    CHECK(is_proper(inst.graph, inst.beta));
    CHECK_FALSE(is_proper(complete_graph(2), Colouring({1, 1}, 1)));
    CHECK(is_proper(edgeless_graph(3), Colouring({1, 1, 1}, 1)));
    CHECK_THROWS_AS(is_proper(complete_graph(2), Colouring({1}, 1)), InputError);
}

TEST_CASE("is_frozen") {
    const auto inst = build_base();
    CHECK(is_frozen(inst.graph, inst.beta));
    CHECK(is_frozen(complete_graph(2), Colouring({1, 2}, 2)));
    CHECK_FALSE(is_frozen(complete_graph(2), Colouring({1, 2}, 3)));
    CHECK_THROWS_AS(is_frozen(complete_graph(2), Colouring({1, 1}, 2)), InputError);
    // Regression constant: alpha is not frozen in R_7(G).
    CHECK_FALSE(is_frozen(inst.graph, inst.alpha));
}

TEST_CASE("enumerate_colourings examples") {
    CHECK(enumerate_colourings(complete_graph(3), 3).size() == 6);
    CHECK(enumerate_colourings(complete_graph(2), 3).size() == 6);
    auto c4 = enumerate_colourings(cycle(4), 2);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0] == col("1212", 2));
    CHECK(c4[1] == col("2121", 2));
    CHECK(enumerate_colourings(complete_graph(3), 2).empty());
    CHECK(enumerate_colourings(Graph(0), 2).size() == 1);
}

TEST_CASE("enumeration is lexicographic and matches the product-space oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng() % 6, 0.4);
        const int k = 1 + static_cast<int>(rng() % 4);
        auto got = enumerate_colourings(g, k);
        auto expected = oracle::proper_colourings(g, k);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(std::equal(got[i].assignment().begin(), got[i].assignment().end(), expected[i].begin()));
            CHECK(is_proper(g, got[i]));
        }
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("enumeration cap") {
    Limits tight;
    tight.enumeration_cap = 50;
    CHECK_THROWS_AS(enumerate_colourings(edgeless_graph(6), 3, tight), ResourceError);
    ColouringEnumerator it(edgeless_graph(6), 3, tight);
    CHECK(it.next());
}

TEST_CASE("count_colourings") {
    CHECK(count_colourings(cycle(4), 3) == 18);
    CHECK(count_colourings(complete_graph(3), 3) == 6);
    CHECK(count_colourings(path_graph(3), 2) == 2);
    CHECK(count_colourings(complete_graph(4), 3) == 0);
    CHECK(count_colourings(edgeless_graph(5), 3) == 243);
    CHECK(count_colourings(Graph(0), 4) == 1);
    CHECK(count_colourings(complete_graph(12), 12) == 479001600);
    CHECK(count_colourings(cycle(12), 3) == 4098);  // (k-1)^n + (k-1)
    CHECK_THROWS_AS(count_colourings(cycle(13), 3), ResourceError);
    CHECK_THROWS_AS(count_colourings(edgeless_graph(12), 100000), ResourceError);
}

TEST_CASE("enumeration count equals the chromatic polynomial") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + rng() % 8, 0.2 + 0.6 * (rng() % 100) / 100.0);
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(enumerate_colourings(g, k).size() == count_colourings(g, k));
    }
}

TEST_CASE("is_frozen matches an empty neighbour stream") {
    oracle::for_each_small_graph(4, [](const Graph& g) {
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& c : enumerate_colourings(g, k))
                CHECK(is_frozen(g, c) == neighbours(g, c).empty());
    });
}

TEST_CASE("colour relabelling preserves properness and frozenness") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + rng() % 6, 0.6);
        const std::size_t k = 2 + rng() % 3;
        std::vector<Colour> raw(g.vertex_count());
        for (auto& x : raw) x = static_cast<Colour>(1 + rng() % k);
        Colouring c(raw, k);
        std::vector<Colour> perm(k);
        std::iota(perm.begin(), perm.end(), Colour{1});
        std::shuffle(perm.begin(), perm.end(), rng);
        Colouring d = c.permuted(perm);
        CHECK(is_proper(g, c) == is_proper(g, d));
        if (is_proper(g, c)) CHECK(is_frozen(g, c) == is_frozen(g, d));
    }
}

TEST_CASE("colouring JSON") {
    const auto c = col("1234", 5);
    CHECK(to_json(c).dump() == R"({"k":5,"assignment":[1,2,3,4]})");
    CHECK(colouring_from_json(to_json(c)) == c);
    CHECK_THROWS_AS(colouring_from_json(Json::parse(R"({"k":2,"assignment":[3]})")), InputError);
    CHECK_THROWS_AS(colouring_from_json(Json::parse(R"({"assignment":[1]})")), InputError);
}
