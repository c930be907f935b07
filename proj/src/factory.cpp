#include "kempe/factory.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

DoublingMap double_graph(const Graph& g, int u) {
    if (u < 0 || u >= g.n) throw PreconditionError("double_graph: vertex out of range");
    if (g.degree(u) != max_degree(g))
        throw PreconditionError("double_graph: vertex does not have maximum degree");
    DoublingMap d;
    d.bridge_u = u;
    d.v1.resize(g.n);
    d.v2.resize(g.n);
    std::iota(d.v1.begin(), d.v1.end(), 0);
    std::iota(d.v2.begin(), d.v2.end(), g.n);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges) edges.emplace_back(a, b);
    for (auto [a, b] : g.edges) edges.emplace_back(a + g.n, b + g.n);
    edges.emplace_back(u, u + g.n);
    d.e1.resize(g.edge_count());
    d.e2.resize(g.edge_count());
    std::iota(d.e1.begin(), d.e1.end(), 0);
    std::iota(d.e2.begin(), d.e2.end(), g.edge_count());
    d.bridge = 2 * g.edge_count();
    d.h = make_graph(2 * g.n, std::move(edges));
    return d;
}

long long count_triangles(const Graph& g) {
    // triangle {a<b<c} is counted exactly once: at edge {a,b} with w=c
    long long count = 0;
    std::vector<char> adj(g.n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (u > v) std::swap(u, v);
        for (int f : g.incident[u]) adj[g.other_end(f, u)] = 1;
        for (int f : g.incident[v]) {
            int w = g.other_end(f, v);
            if (w > v && adj[w]) ++count;
        }
        for (int f : g.incident[u]) adj[g.other_end(f, u)] = 0;
    }
    return count;
}

namespace {

// farthest-pair realizing the diameter, ties by smallest vertex indices
std::pair<int, int> diameter_pair(const Graph& g) {
    int best = -1, bu = 0, bv = 0;
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : g.incident[x]) {
                int y = g.other_end(e, x);
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] > best) {
                best = dist[v];
                bu = s;
                bv = v;
            }
        }
    }
    return {bu, bv};
}

bool is_tree(const Graph& g) {
    if (g.edge_count() != g.n - 1) return false;
    return diameter(g).has_value(); // connected
}

} // namespace

Graph prop31_generate(int k, const Graph& tree) {
    if (k < 0) throw PreconditionError("prop31_generate: k must be nonnegative");
    if (!is_tree(tree) || tree.n < 2)
        throw PreconditionError("prop31_generate: base graph is not a tree with an edge");
    int d = *diameter(tree);

    // H_0: hang a triangle on one endpoint of a diameter pair
    auto [x1, y1] = diameter_pair(tree);
    (void)y1;
    std::vector<std::pair<int, int>> edges = tree.edges;
    int x2 = tree.n, x3 = tree.n + 1;
    edges.emplace_back(x1, x2);
    edges.emplace_back(x2, x3);
    edges.emplace_back(x3, x1);
    Graph h = make_graph(tree.n + 2, std::move(edges));

    for (int t = 0; t < k; ++t) {
        auto [u, v] = diameter_pair(h);
        (void)v;
        std::vector<std::pair<int, int>> he;
        for (int copy = 0; copy < 3; ++copy)
            for (auto [a, b] : h.edges) he.emplace_back(a + copy * h.n, b + copy * h.n);
        he.emplace_back(u, u + h.n);
        he.emplace_back(u + h.n, u + 2 * h.n);
        he.emplace_back(u + 2 * h.n, u);
        h = make_graph(3 * h.n, std::move(he));
    }

    if (!is_chordless(h))
        throw InvariantBreachError("prop31_generate: result is not chordless");
    long long want_triangles = 1;
    for (int i = 0; i < k; ++i) want_triangles *= 3;
    if (count_triangles(h) < want_triangles)
        throw InvariantBreachError("prop31_generate: too few triangles");
    auto dia = diameter(h);
    if (!dia || *dia <= (1LL << k) * d)
        throw InvariantBreachError("prop31_generate: diameter bound violated");
    return h;
}

Graph corpus_path(int n) {
    if (n < 1) throw PreconditionError("corpus_path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

Graph corpus_cycle(int n) {
    if (n < 3) throw PreconditionError("corpus_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(edges));
}

Graph corpus_star(int leaves) {
    if (leaves < 0) throw PreconditionError("corpus_star: negative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(edges));
}

Graph corpus_tree(int n, uint64_t seed) {
    if (n < 1) throw PreconditionError("corpus_tree: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rand_below(rng, v), v);
    return make_graph(n, std::move(edges));
}

Graph corpus_theta(int a, int b, int c) {
    int arms[3] = {a, b, c};
    for (int len : arms)
        if (len < 1) throw PreconditionError("corpus_theta: arm length must be >= 1");
    if ((a == 1) + (b == 1) + (c == 1) > 1)
        throw PreconditionError("corpus_theta: two length-1 arms would be parallel edges");
    std::vector<std::pair<int, int>> edges;
    int n = 2;
    for (int len : arms) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            edges.emplace_back(prev, n);
            prev = n++;
        }
        edges.emplace_back(prev, 1);
    }
    return make_graph(n, std::move(edges));
}

Graph corpus_random_triangle_free(int n, int target_edges, uint64_t seed) {
    if (n < 1) throw PreconditionError("corpus_random_triangle_free: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rand_below(rng, static_cast<int>(i))]);

    std::vector<std::pair<int, int>> picked;
    Graph g = make_graph(n, {});
    for (auto [u, v] : all) {
        if (static_cast<int>(picked.size()) >= target_edges) break;
        // adding uv keeps the graph triangle-free iff u, v share no neighbor
        bool ok = true;
        for (int e : g.incident[u])
            if (g.has_edge(g.other_end(e, u), v)) { ok = false; break; }
        if (!ok) continue;
        picked.emplace_back(u, v);
        g = make_graph(n, picked);
    }
    if (!is_triangle_free(g))
        throw InvariantBreachError("corpus_random_triangle_free: certification failed");
    return g;
}

Graph corpus_random_chordless(int n, int extra_edges, uint64_t seed) {
    if (n < 1) throw PreconditionError("corpus_random_chordless: need n >= 1");
    std::mt19937_64 rng(seed);
    Graph g = corpus_tree(n, rng());
    // trees are chordless; grow by rejection sampling, re-certifying each add
    int added = 0, attempts = 0;
    while (added < extra_edges && attempts < 50 * (extra_edges + 1)) {
        ++attempts;
        int u = rand_below(rng, n), v = rand_below(rng, n);
        if (u == v || g.has_edge(u, v)) continue;
        auto edges = g.edges;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        Graph cand = make_graph(n, std::move(edges));
        if (!is_chordless(cand)) continue;
        g = std::move(cand);
        ++added;
    }
    if (!is_chordless(g))
        throw InvariantBreachError("corpus_random_chordless: certification failed");
    return g;
}

} // namespace kempe
