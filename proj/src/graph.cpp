#include "kempe/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

int Graph::find_edge(int u, int v) const {
    for (int e : incident[u]) {
        if (other_end(e, u) == v) return e;
    }
    return -1;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge " + std::to_string(i) + " endpoint out of range");
        if (u == v)
            throw PreconditionError("edge " + std::to_string(i) + " is a self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw PreconditionError("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.incident.assign(n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.incident[g.edges[e].first].push_back(e);
        g.incident[g.edges[e].second].push_back(e);
    }
    return g;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    std::vector<char> mark(g.n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        for (int f : g.incident[u]) mark[g.other_end(f, u)] = 1;
        for (int f : g.incident[v]) {
            int w = g.other_end(f, v);
            if (w != u && mark[w]) {
                for (int f2 : g.incident[u]) mark[g.other_end(f2, u)] = 0;
                return std::array<int, 3>{u, v, w};
            }
        }
        for (int f : g.incident[u]) mark[g.other_end(f, u)] = 0;
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// Two internally vertex-disjoint a-b paths in g with edge `skip` removed.
// Vertex-split flow network: node 2v = v_in, 2v+1 = v_out, interior vertices
// get capacity 1 on the in->out arc. Runs at most two BFS augmentations.
// On success fills `paths` with the two vertex sequences (a ... b).
bool two_disjoint_paths(const Graph& g, int a, int b, int skip,
                        std::array<std::vector<int>, 2>* paths) {
    struct Arc {
        int to;
        int cap;
    };
    int nn = 2 * g.n;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj(nn);
    auto add_arc = [&](int from, int to, int cap) {
        adj[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        adj[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    };
    for (int v = 0; v < g.n; ++v)
        add_arc(2 * v, 2 * v + 1, (v == a || v == b) ? 2 : 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == skip) continue;
        auto [u, v] = g.edges[e];
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
    }
    int src = 2 * a + 1, dst = 2 * b;
    int flow = 0;
    std::vector<int> pred(nn);
    for (int round = 0; round < 2; ++round) {
        std::fill(pred.begin(), pred.end(), -1);
        pred[src] = -2;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && pred[dst] == -1) {
            int x = q.front();
            q.pop();
            for (int id : adj[x]) {
                if (arcs[id].cap > 0 && pred[arcs[id].to] == -1) {
                    pred[arcs[id].to] = id;
                    q.push(arcs[id].to);
                }
            }
        }
        if (pred[dst] == -1) break;
        for (int x = dst; x != src;) {
            int id = pred[x];
            arcs[id].cap -= 1;
            arcs[id ^ 1].cap += 1;
            x = arcs[id ^ 1].to;
        }
        ++flow;
    }
    if (flow < 2) return false;
    if (paths) {
        // Decompose the flow: forward arcs with residual 0 carry one unit.
        std::vector<char> used(arcs.size(), 0);
        for (int p = 0; p < 2; ++p) {
            std::vector<int>& path = (*paths)[p];
            path.clear();
            path.push_back(a);
            int x = src;
            while (x != dst) {
                int next = -1;
                for (int id : adj[x]) {
                    if ((id & 1) == 0 && arcs[id].cap == 0 && !used[id]) {
                        used[id] = 1;
                        next = arcs[id].to;
                        break;
                    }
                }
                if (next < 0)
                    throw InvariantBreachError("two_disjoint_paths: flow decomposition failed");
                x = next;
                if (x % 2 == 0 && x != dst) {
                    // entering w_in of an interior vertex; hop through the split arc
                    path.push_back(x / 2);
                    for (int id : adj[x]) {
                        if ((id & 1) == 0 && arcs[id].to == x + 1 && arcs[id].cap == 0 && !used[id]) {
                            used[id] = 1;
                            break;
                        }
                    }
                    x = x + 1;
                }
            }
            path.push_back(b);
        }
    }
    return true;
}

} // namespace

bool is_chordless(const Graph& g, ChordWitness* witness) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        std::array<std::vector<int>, 2> paths;
        if (!two_disjoint_paths(g, u, v, e, witness ? &paths : nullptr)) continue;
        if (witness) {
            // Both paths have length >= 2 (the only length-1 path was removed),
            // so u and v are nonconsecutive on the concatenated cycle.
            witness->cycle = paths[0];
            for (size_t i = paths[1].size() - 1; i >= 2; --i)
                witness->cycle.push_back(paths[1][i - 1]);
            witness->chord = e;
        }
        return false;
    }
    return true;
}

std::optional<int> diameter(const Graph& g) {
    if (g.n <= 1) return 0;
    int best = 0;
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
            if (dist[v] == -1) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

Graph drop_edges(const Graph& g, const std::vector<int>& edge_ids,
                 std::vector<int>* kept_old_ids) {
    std::vector<char> drop(g.edge_count(), 0);
    for (int e : edge_ids) drop[e] = 1;
    std::vector<std::pair<int, int>> kept;
    if (kept_old_ids) kept_old_ids->clear();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop[e]) continue;
        kept.push_back(g.edges[e]);
        if (kept_old_ids) kept_old_ids->push_back(e);
    }
    return make_graph(g.n, std::move(kept));
}

} // namespace kempe
