#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kempe/engine.hpp"
#include "kempe/errors.hpp"
#include "kempe/factory.hpp"
#include "kempe/graph.hpp"
#include "testutil.hpp"

using namespace kempe;
using namespace testutil;

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS_AS(mk(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(mk(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(mk(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(make_graph(-1, {}), PreconditionError);
}

TEST_CASE("max_degree") {
    CHECK(max_degree(mk(3, {})) == 0);
    CHECK(max_degree(corpus_star(3)) == 3);
    CHECK(max_degree(corpus_cycle(5)) == 2);
}

TEST_CASE("is_triangle_free") {
    CHECK_FALSE(is_triangle_free(corpus_cycle(3)));
    CHECK(is_triangle_free(corpus_cycle(5)));
    // the k=0 family member contains its one triangle
    Graph h0 = prop31_generate(0, corpus_path(2));
    CHECK_FALSE(is_triangle_free(h0));
    CHECK(count_triangles(h0) == 1);
}

TEST_CASE("is_chordless basics with witness") {
    CHECK(is_chordless(corpus_cycle(3)));
    ChordWitness w;
    REQUIRE_FALSE(is_chordless(diamond(), &w));
    // witness is a real cycle with a real chord
    int len = static_cast<int>(w.cycle.size());
    REQUIRE(len >= 4);
    std::set<int> distinct(w.cycle.begin(), w.cycle.end());
    CHECK(static_cast<int>(distinct.size()) == len);
    Graph d = diamond();
    for (int i = 0; i < len; ++i)
        CHECK(d.has_edge(w.cycle[i], w.cycle[(i + 1) % len]));
    auto [cu, cv] = d.edges[w.chord];
    int pu = -1, pv = -1;
    for (int i = 0; i < len; ++i) {
        if (w.cycle[i] == cu) pu = i;
        if (w.cycle[i] == cv) pv = i;
    }
    REQUIRE(pu >= 0);
    REQUIRE(pv >= 0);
    int gap = std::abs(pu - pv);
    CHECK(gap != 1);
    CHECK(gap != len - 1);
}

TEST_CASE("Petersen graph is triangle-free but not chordless") {
    Graph p = petersen();
    CHECK(is_triangle_free(p));
    CHECK_FALSE(is_chordless(p));
}

TEST_CASE("diameter") {
    CHECK(diameter(mk(2, {{0, 1}})) == 1);
    CHECK(diameter(corpus_path(4)) == 3);
    CHECK_FALSE(diameter(mk(3, {{0, 1}})).has_value()); // disconnected
    CHECK(diameter(mk(1, {})) == 0);
    // H_0 from a single-edge tree: D = d + 1 = 2
    CHECK(diameter(prop31_generate(0, corpus_path(2))) == 2);
}

TEST_CASE("chordless agrees with naive cycle enumeration, exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n) {
        uint64_t limit = 1ull << pair_count(n);
        for (uint64_t mask = 0; mask < limit; ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(is_chordless(g) == naive_chordless(g));
        }
    }
}

TEST_CASE("chordless agrees with naive oracle on random graphs up to n=9") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 6 + rand_below(rng, 4);
        uint64_t mask = rng() & ((1ull << pair_count(n)) - 1);
        // thin out dense masks so chordless graphs actually appear
        mask &= rng() | rng();
        Graph g = graph_from_mask(n, mask);
        CHECK(is_chordless(g) == naive_chordless(g));
    }
}

TEST_CASE("class membership is monotone under edge deletion") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = iter % 2 == 0 ? corpus_random_triangle_free(8, 12, rng())
                                : corpus_random_chordless(8, 3, rng());
        bool tf = is_triangle_free(g);
        bool cl = is_chordless(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            Graph h = drop_edges(g, {e});
            if (tf) CHECK(is_triangle_free(h));
            if (cl) CHECK(is_chordless(h));
        }
    }
}

TEST_CASE("chordless graphs with max degree >= 3 are Class 1") {
    std::mt19937_64 rng(99);
    int found = 0;
    for (int iter = 0; iter < 60 && found < 25; ++iter) {
        Graph g = corpus_random_chordless(9, 4, rng());
        if (max_degree(g) < 3) continue;
        ++found;
        CHECK(find_delta_coloring(g).class_one());
    }
    CHECK(found >= 10);
}
