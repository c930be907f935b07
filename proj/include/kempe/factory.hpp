#pragma once

#include <cstdint>
#include <random>

#include "kempe/graph.hpp"

namespace kempe {

// Two disjoint copies of g joined by one edge between the copies of a
// max-degree vertex. Copy 1 keeps g's vertex/edge indices, copy 2 is
// offset; the bridge is the last edge.
struct DoublingMap {
    Graph h;
    std::vector<int> v1, v2; // vertex maps g -> copies
    std::vector<int> e1, e2; // edge maps g -> copies
    int bridge = -1;         // edge index of u1u2 in h
    int bridge_u = -1;       // the doubled vertex in g
};

// Throws unless deg(u) == max_degree(g).
DoublingMap double_graph(const Graph& g, int u);

// The chordless-with-many-triangles family: H_0 is `tree` plus a triangle
// hung on one end of a diameter-realizing pair, and each level joins three
// copies by a triangle on copies of a diameter-realizing vertex. The result
// has at least 3^k triangles and diameter greater than 2^k * d; both bounds
// are checked numerically before returning.
Graph prop31_generate(int k, const Graph& tree);

// Count of vertex triples that induce a triangle.
long long count_triangles(const Graph& g);

Graph corpus_path(int n);
Graph corpus_cycle(int n);
Graph corpus_star(int leaves);
Graph corpus_tree(int n, uint64_t seed);
// Two hubs joined by three internally disjoint paths of a, b, c edges.
// All arm lengths >= 2 keeps the graph triangle-free and chordless.
Graph corpus_theta(int a, int b, int c);
Graph corpus_random_triangle_free(int n, int target_edges, uint64_t seed);
Graph corpus_random_chordless(int n, int extra_edges, uint64_t seed);

// Deterministic helper used by the generators; avoids distribution
// implementation differences.
inline int rand_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<uint64_t>(n));
}

} // namespace kempe
