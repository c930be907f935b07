#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kempe/errors.hpp"
#include "kempe/factory.hpp"
#include "kempe/fan.hpp"
#include "testutil.hpp"

using namespace kempe;
using namespace testutil;

namespace {

// star on center 0 with edges (0,1)=1, (0,2)=2, (0,3)=3, palette 4
struct StarRig {
    Graph g = corpus_star(3);
    EdgeColoring c = col(4, {1, 2, 3});
    MissingAssignment m{MissingPolicy::plain, {4, 2, 3, 4}};
};

} // namespace

TEST_CASE("build_fan classifies path, cycle and comet") {
    StarRig rig;
    Fan path = build_fan(rig.g, rig.c, rig.m, 0, 1);
    CHECK(path.kind == FanKind::path);
    CHECK(path.spokes == std::vector<int>{0, 1, 2});
    CHECK(path.leaves == std::vector<int>{1, 2, 3});

    MissingAssignment m2 = rig.m;
    m2.at[3] = 1; // m(x_p) = color(ux_0)
    Fan cycle = build_fan(rig.g, rig.c, m2, 0, 1);
    CHECK(cycle.kind == FanKind::cycle);
    CHECK(cycle.spokes == std::vector<int>{0, 1, 2});

    MissingAssignment m3 = rig.m;
    m3.at[3] = 2; // m(x_p) = color(ux_1)
    Fan comet = build_fan(rig.g, rig.c, m3, 0, 1);
    CHECK(comet.kind == FanKind::comet);
    CHECK(comet.reentry == 1);

    CHECK_THROWS_AS(build_fan(rig.g, rig.c, rig.m, 1, 2), PreconditionError);
}

TEST_CASE("fan_digraph arcs") {
    StarRig rig;
    auto arcs = fan_digraph(rig.g, rig.c, rig.m, 0);
    CHECK(arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    MissingAssignment m2 = rig.m;
    m2.at[3] = 1;
    auto cyc = fan_digraph(rig.g, rig.c, m2, 0);
    CHECK(cyc == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});

    Graph single = mk(2, {{0, 1}});
    EdgeColoring c = col(2, {1});
    MissingAssignment m{MissingPolicy::plain, {2, 2}};
    CHECK(fan_digraph(single, c, m, 0).empty());
}

TEST_CASE("fans are unique: rebuilding from ux_0 reproduces them") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = corpus_random_triangle_free(7, 9, rng());
        if (g.edge_count() == 0) continue;
        int t = max_degree(g) + 1;
        auto c = random_proper_coloring(g, t, rng);
        REQUIRE(c.has_value());
        auto m = choose_missing(g, *c, MissingPolicy::one_last);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            Fan fan = build_fan(g, *c, m, u, v);
            // chaining invariant
            for (int i = 0; i + 1 <= fan.p(); ++i)
                CHECK(m.at[fan.leaves[i]] == c->color[fan.spokes[i + 1]]);
            Fan again = build_fan(g, *c, m, u, v);
            CHECK(again.spokes == fan.spokes);
            CHECK(again.kind == fan.kind);
            CHECK(again.reentry == fan.reentry);
        }
    }
}

TEST_CASE("shift_path_fan: p=0 single swap") {
    Graph single = mk(2, {{0, 1}});
    EdgeColoring c = col(3, {1});
    MissingAssignment m{MissingPolicy::plain, {2, 2}};
    Fan fan = build_fan(single, c, m, 0, 1);
    REQUIRE(fan.kind == FanKind::path);
    ShiftResult sr = shift_path_fan(single, c, fan);
    CHECK(sr.trace.size() == 1);
    CHECK(sr.coloring.color == std::vector<int>{2});
}

TEST_CASE("shift_path_fan on the star fan") {
    StarRig rig;
    Fan fan = build_fan(rig.g, rig.c, rig.m, 0, 1);
    ShiftResult sr = shift_path_fan(rig.g, rig.c, fan);
    CHECK(sr.trace.size() == 3);
    CHECK(sr.coloring.color == std::vector<int>{2, 3, 4});
    CHECK(sr.missing.at[0] == 1); // m'(u) = color(ux_0)
    CHECK(sr.missing.at[1] == 1);
    CHECK(sr.missing.at[2] == 2);
    CHECK(sr.missing.at[3] == 3);
    CHECK(verify_trace(rig.g, rig.c, sr.trace, sr.coloring));
    // trace followed by its reverse restores the input
    KempeTrace both = sr.trace;
    KempeTrace undo = reversed(sr.trace);
    both.insert(both.end(), undo.begin(), undo.end());
    CHECK(verify_trace(rig.g, rig.c, both, rig.c));
    // matches the pure definition
    auto [target, m2] = shift_target(rig.g, rig.c, fan);
    CHECK(sr.coloring.color == target.color);
    CHECK(sr.missing.at == m2.at);
}

TEST_CASE("shift_target on a cycle fan") {
    StarRig rig;
    MissingAssignment m2 = rig.m;
    m2.at[3] = 1;
    Fan cycle = build_fan(rig.g, rig.c, m2, 0, 1);
    auto [shifted, mm] = shift_target(rig.g, rig.c, cycle);
    CHECK(shifted.color == std::vector<int>{2, 3, 1});
    CHECK(mm.at[0] == 4); // m'(u) unchanged for cycles

    CHECK_THROWS_AS(shift_target(rig.g, rig.c,
                                 [&] {
                                     MissingAssignment m3 = rig.m;
                                     m3.at[3] = 2;
                                     return build_fan(rig.g, rig.c, m3, 0, 1);
                                 }()),
                    PreconditionError);
}

TEST_CASE("shift_target properness and untouched color classes, randomized") {
    std::mt19937_64 rng(777);
    int shifted_count = 0;
    for (int iter = 0; iter < 400 && shifted_count < 200; ++iter) {
        Graph g = iter % 2 == 0 ? corpus_random_triangle_free(8, 11, rng())
                                : corpus_random_chordless(8, 3, rng());
        if (g.edge_count() == 0) continue;
        int t = max_degree(g) + 1;
        if (t < 2) continue;
        auto c = random_proper_coloring(g, t, rng);
        REQUIRE(c.has_value());
        auto m = choose_missing(g, *c, iter % 3 == 0 ? MissingPolicy::plain
                                                     : MissingPolicy::one_last);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            Fan fan = build_fan(g, *c, m, u, v);
            if (fan.kind == FanKind::comet) continue;
            ++shifted_count;
            auto [out, m2] = shift_target(g, *c, fan);
            CHECK(validate_proper(g, out));
            CHECK(missing_valid(g, out, m2));
            // classes of colors off the fan are untouched
            std::set<int> touched;
            for (size_t i = 0; i < fan.spokes.size(); ++i) {
                touched.insert(c->color[fan.spokes[i]]);
                touched.insert(fan.missing.at[fan.leaves[i]]);
            }
            for (int j = 1; j <= t; ++j)
                if (!touched.count(j)) CHECK(color_class(out, j) == color_class(*c, j));
            if (fan.kind == FanKind::path) {
                ShiftResult sr = shift_path_fan(g, *c, fan);
                CHECK(sr.coloring.color == out.color);
                CHECK(verify_trace(g, *c, sr.trace, out));
            }
        }
    }
    CHECK(shifted_count >= 200);
}

TEST_CASE("is_saturated agrees with a direct per-index recomputation") {
    // independent recomputation: walk the bicolored chain from u by hand
    auto chain_reaches = [](const Graph& g, const EdgeColoring& c, int a, int b, int from,
                            int want) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == want) return true;
            for (int e : g.incident[x]) {
                if (c.color[e] != a && c.color[e] != b) continue;
                int y = g.other_end(e, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };

    std::mt19937_64 rng(2024);
    int cycles_seen = 0;
    for (int iter = 0; iter < 600 && cycles_seen < 120; ++iter) {
        Graph g = iter % 2 == 0 ? graph_from_mask(6, rng() & ((1ull << 15) - 1))
                                : corpus_random_triangle_free(6, 8, rng());
        if (g.edge_count() < 3) continue;
        int t = max_degree(g) + 1;
        auto copt = random_proper_coloring(g, t, rng);
        if (!copt) continue;
        auto m = choose_missing(g, *copt, MissingPolicy::one_last);
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int side = 0; side < 2; ++side) {
                int u = side == 0 ? g.edges[e].first : g.edges[e].second;
                int v = g.other_end(e, u);
                Fan fan = build_fan(g, *copt, m, u, v);
                if (fan.kind != FanKind::cycle) continue;
                ++cycles_seen;
                bool direct = true;
                for (int i = 0; i <= fan.p(); ++i) {
                    int prev = fan.leaves[i == 0 ? fan.p() : i - 1];
                    if (!chain_reaches(g, *copt, copt->color[fan.spokes[i]], m.at[u], u, prev)) {
                        direct = false;
                        break;
                    }
                }
                CHECK(is_saturated(g, *copt, fan) == direct);
            }
        }
    }
    CHECK(cycles_seen >= 120);
}
