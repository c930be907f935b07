#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kempe/engine.hpp"
#include "kempe/errors.hpp"
#include "kempe/factory.hpp"
#include "kempe/json_io.hpp"
#include "kempe/oracle.hpp"
#include "testutil.hpp"

using namespace kempe;
using namespace testutil;

TEST_CASE("exact_coloring and find_delta_coloring") {
    // P4 has a proper 2-coloring
    SolverResult p4 = find_delta_coloring(corpus_path(4));
    REQUIRE(p4.class_one());
    CHECK(p4.coloring->t == 2);
    CHECK(validate_proper(corpus_path(4), *p4.coloring));

    // odd cycle: Class 2 certificate
    SolverResult c5 = find_delta_coloring(corpus_cycle(5));
    CHECK_FALSE(c5.class_one());
    CHECK(c5.palette == 2);

    // star: one color per edge
    SolverResult star = find_delta_coloring(corpus_star(3));
    REQUIRE(star.class_one());
    CHECK(star.coloring->color == std::vector<int>{1, 2, 3});

    // edgeless graphs are trivially colorable
    CHECK(find_delta_coloring(mk(4, {})).class_one());

    // determinism: edges by index, colors ascending
    Graph g = corpus_theta(2, 2, 3);
    auto a = exact_coloring(g, max_degree(g));
    auto b = exact_coloring(g, max_degree(g));
    REQUIRE(a.has_value());
    CHECK(a->color == b->color);
}

TEST_CASE("align_first_class on the alternating C4") {
    // a single whole-cycle (1,2) swap aligns this instance; the descent must
    // reach the same class through its reductions
    Graph c4 = corpus_cycle(4);
    EdgeColoring beta = col(3, {1, 2, 1, 2});
    std::vector<int> target{1, 3}; // the two edges colored 2

    EdgeColoring one_swap = kempe_swap(c4, beta, 1, 2, 0);
    CHECK(color_class(one_swap, 1) == target);

    AlignResult res = align_first_class(c4, beta, target);
    CHECK(color_class(res.coloring, 1) == target);
    CHECK(verify_trace(c4, beta, res.trace, res.coloring));
    for (size_t i = 1; i < res.descent_log.size(); ++i)
        CHECK(res.descent_log[i].lex_less(res.descent_log[i - 1]));
}

TEST_CASE("align_first_class with an already aligned input") {
    Graph c4 = corpus_cycle(4);
    EdgeColoring beta = col(3, {1, 2, 1, 2});
    AlignResult res = align_first_class(c4, beta, {0, 2});
    CHECK(res.trace.empty());
    CHECK(res.coloring.color == beta.color);
}

TEST_CASE("align_first_class randomized descent is monotone and verified") {
    std::mt19937_64 rng(90125);
    int runs = 0;
    long long reductions = 0;
    for (int iter = 0; iter < 400 && runs < 200; ++iter) {
        Graph g;
        switch (iter % 3) {
        case 0: g = corpus_tree(4 + rand_below(rng, 9), rng()); break;
        case 1: g = corpus_cycle(4 + 2 * rand_below(rng, 5)); break;
        default:
            g = corpus_theta(2 + rand_below(rng, 2), 2 + rand_below(rng, 2),
                             2 + rand_below(rng, 3));
            break;
        }
        SolverResult sr = find_delta_coloring(g);
        if (!sr.class_one() || max_degree(g) < 2) continue;
        auto beta = random_proper_coloring(g, max_degree(g) + 1, rng);
        REQUIRE(beta.has_value());
        std::vector<int> target = color_class(*sr.coloring, 1);
        AlignResult res = align_first_class(g, *beta, target);
        ++runs;
        reductions += static_cast<long long>(res.descent_log.size()) - 1;
        CHECK(color_class(res.coloring, 1) == target);
        CHECK(verify_trace(g, *beta, res.trace, res.coloring));
        for (size_t i = 1; i < res.descent_log.size(); ++i)
            CHECK(res.descent_log[i].lex_less(res.descent_log[i - 1]));
    }
    CHECK(runs >= 200);
    CHECK(reductions > 0);
}

TEST_CASE("transform: identical colorings verify trivially") {
    Graph g = corpus_theta(2, 2, 2);
    EdgeColoring beta = *exact_coloring(g, max_degree(g) + 1);
    KempeTrace trace = transform(g, beta, beta);
    CHECK(verify_trace(g, beta, trace, beta));
}

TEST_CASE("transform on C6 pairs differing by one cycle swap") {
    Graph c6 = corpus_cycle(6);
    EdgeColoring b1 = col(3, {1, 2, 1, 2, 1, 2});
    EdgeColoring b2 = kempe_swap(c6, b1, 1, 2, 0);
    KempeTrace trace = transform(c6, b1, b2);
    CHECK(verify_trace(c6, b1, trace, b2));
    CHECK(oracle_equivalent(c6, 3, b1, b2).equivalent);
}

TEST_CASE("transform base case: matchings align edge by edge") {
    Graph matching = mk(5, {{0, 1}, {2, 3}});
    EdgeColoring b1 = col(2, {1, 2});
    EdgeColoring b2 = col(2, {2, 2});
    KempeTrace trace = transform(matching, b1, b2);
    CHECK(trace.size() == 1);
    CHECK(verify_trace(matching, b1, trace, b2));
}

TEST_CASE("transform connects all coloring pairs on the 3-spoke star") {
    Graph star = corpus_star(3);
    auto all = enumerate_colorings(star, 4);
    ColoringSpace space = equivalence_classes(star, 4);
    REQUIRE(space.class_count == 1);
    for (size_t i = 0; i < all.size(); i += 7) {
        for (size_t j = 0; j < all.size(); j += 9) {
            EdgeColoring a{4, all[i]}, b{4, all[j]};
            KempeTrace trace = transform(star, a, b);
            CHECK(verify_trace(star, a, trace, b));
        }
    }
}

TEST_CASE("transform rejects out-of-class and Class 2 inputs") {
    // diamond: neither triangle-free nor chordless
    EdgeColoring b = *exact_coloring(diamond(), 4);
    CHECK_THROWS_AS(transform(diamond(), b, b), ClassViolationError);

    // odd cycle: Class 2, must be routed through class2_transform
    Graph c5 = corpus_cycle(5);
    EdgeColoring c = *exact_coloring(c5, 3);
    CHECK_THROWS_AS(transform(c5, c, c), PreconditionError);

    // palette mismatch
    Graph p4 = corpus_path(4);
    EdgeColoring wide = *exact_coloring(p4, 4);
    CHECK_THROWS_AS(transform(p4, wide, wide), PreconditionError);
}

TEST_CASE("class2_transform on odd cycles at chi'+1") {
    for (int n : {3, 5}) {
        CAPTURE(n);
        Graph g = corpus_cycle(n);
        std::mt19937_64 rng(1000 + n);
        auto b1 = random_proper_coloring(g, 4, rng);
        auto b2 = random_proper_coloring(g, 4, rng);
        REQUIRE(b1.has_value());
        REQUIRE(b2.has_value());
        KempeTrace trace = class2_transform(g, *b1, *b2);
        CHECK(verify_trace(g, *b1, trace, *b2));
        CHECK(oracle_equivalent(g, 4, *b1, *b2).equivalent);
    }
}

TEST_CASE("class2_transform delegates to transform for Class 1 graphs") {
    Graph g = corpus_path(5);
    std::mt19937_64 rng(55);
    auto b1 = random_proper_coloring(g, 3, rng);
    auto b2 = random_proper_coloring(g, 3, rng);
    KempeTrace trace = class2_transform(g, *b1, *b2);
    CHECK(verify_trace(g, *b1, trace, *b2));
}

TEST_CASE("project_trace: steps inside the far copy vanish, crossings project") {
    // doubled P3 at the middle vertex; H is a 6-vertex tree
    Graph p3 = corpus_path(3);
    DoublingMap d = double_graph(p3, 1);
    EdgeColoring g_start = col(3, {1, 2});
    EdgeColoring h_start{3, std::vector<int>(d.h.edge_count(), 0)};
    for (int e = 0; e < p3.edge_count(); ++e) {
        h_start.color[d.e1[e]] = g_start.color[e];
        h_start.color[d.e2[e]] = g_start.color[e];
    }
    h_start.color[d.bridge] = 3;
    REQUIRE(validate_proper(d.h, h_start));

    // a swap confined to copy 2 projects to nothing (the pair must avoid the
    // bridge color or the chain would cross)
    int far_vertex = d.v2[0];
    KempeTrace inside{{1, 2, far_vertex}};
    KempeTrace projected = project_trace(d, p3, g_start, h_start, inside);
    CHECK(projected.empty());

    // a chain crossing the bridge projects to exactly one g-step whose
    // component is the copy-1 restriction
    KempeTrace crossing{{2, 3, d.v1[1]}};
    KempeTrace proj2 = project_trace(d, p3, g_start, h_start, crossing);
    REQUIRE(proj2.size() == 1);
    EdgeColoring g_after = apply_trace(p3, g_start, proj2);
    EdgeColoring h_after = apply_trace(d.h, h_start, crossing);
    for (int e = 0; e < p3.edge_count(); ++e)
        CHECK(g_after.color[e] == h_after.color[d.e1[e]]);
}

TEST_CASE("transform agrees with the oracle over random corpus instances") {
    std::mt19937_64 rng(31337);
    int done = 0;
    for (int iter = 0; iter < 200 && done < 40; ++iter) {
        Graph g = iter % 2 == 0 ? corpus_random_chordless(7, 3, rng())
                                : corpus_random_triangle_free(6, 7, rng());
        SolverResult sr = find_delta_coloring(g);
        if (!sr.class_one() || max_degree(g) < 2) continue;
        int t = max_degree(g) + 1;
        double space = 1;
        for (int e = 0; e < g.edge_count(); ++e) space *= t;
        if (space > 3e6) continue;
        auto b1 = random_proper_coloring(g, t, rng);
        auto b2 = random_proper_coloring(g, t, rng);
        if (!b1 || !b2) continue;
        KempeTrace trace = transform(g, *b1, *b2);
        CHECK(verify_trace(g, *b1, trace, *b2));
        CHECK(oracle_equivalent(g, t, *b1, *b2).equivalent);
        ++done;
    }
    CHECK(done >= 40);
}
