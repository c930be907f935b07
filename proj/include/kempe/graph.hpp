#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace kempe {

// Immutable simple undirected graph. Edges are identified by their index in
// `edges`; every coloring and trace in this library keys on edge indices.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> incident; // vertex -> incident edge indices

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(incident[v].size()); }
    std::pair<int, int> ends(int e) const { return edges[e]; }

    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }

    // -1 if u and v are not adjacent.
    int find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }
};

// Validates and builds. Throws PreconditionError on loops, duplicate edges,
// or endpoint indices out of range.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// A cycle together with one of its chords, returned as evidence by
// is_chordless when the answer is false.
struct ChordWitness {
    std::vector<int> cycle; // vertex sequence, consecutive pairs (cyclically) are edges
    int chord = -1;         // edge index joining two nonconsecutive cycle vertices
};

int max_degree(const Graph& g);

bool is_triangle_free(const Graph& g);

// Returns the three vertices of some triangle, if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// True iff no edge of g is a chord of any cycle. An edge uv is a chord of
// some cycle exactly when g - uv still has two internally vertex-disjoint
// u-v paths, so we run a Menger-style check per edge (two rounds of
// augmenting-path search with unit vertex capacities). On false, a witness
// cycle + chord is stored into *witness when given.
bool is_chordless(const Graph& g, ChordWitness* witness = nullptr);

// Max over vertex pairs of shortest-path length; nullopt if disconnected.
std::optional<int> diameter(const Graph& g);

// Copy of g without the listed edges (vertex set unchanged). kept_old_ids,
// when given, receives the old index of each surviving edge in new order.
Graph drop_edges(const Graph& g, const std::vector<int>& edge_ids,
                 std::vector<int>* kept_old_ids = nullptr);

} // namespace kempe
