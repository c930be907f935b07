#include "kempe/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

void check_cap(const Graph& g, int t, long long cap) {
    double space = 1.0;
    for (int e = 0; e < g.edge_count(); ++e) {
        space *= t;
        if (space > static_cast<double>(cap))
            throw CapExceededError("oracle: t^|E| = " + std::to_string(t) + "^" +
                                   std::to_string(g.edge_count()) + " exceeds cap " +
                                   std::to_string(cap));
    }
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// neighbors under one Kempe swap, generated through kempe_swap only
template <typename F>
void for_each_swap(const Graph& g, const EdgeColoring& c, F&& visit) {
    for (int a = 1; a <= c.t; ++a) {
        for (int b = a + 1; b <= c.t; ++b) {
            for (int v = 0; v < g.n; ++v) {
                if (edge_colored(g, c, v, a) < 0 && edge_colored(g, c, v, b) < 0) continue;
                TraceStep rec;
                EdgeColoring next = kempe_swap(g, c, a, b, v, &rec);
                visit(std::move(next), rec);
            }
        }
    }
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<int> ColoringSpace::class_sizes() const {
    std::vector<int> sizes(class_count, 0);
    for (int label : component) ++sizes[label];
    return sizes;
}

std::vector<std::vector<int>> enumerate_colorings(const Graph& g, int t, long long cap) {
    check_cap(g, t, cap);
    std::vector<std::vector<int>> out;
    const int m = g.edge_count();
    if (m == 0) {
        out.push_back({});
        return out;
    }
    if (t <= 0) return out;
    std::vector<int> col(m, 0);
    std::vector<uint64_t> used(g.n, 0);
    int e = 0;
    while (e >= 0) {
        auto [a, b] = g.edges[e];
        int prev = col[e];
        if (prev) {
            used[a] &= ~(1ull << prev);
            used[b] &= ~(1ull << prev);
        }
        int next = 0;
        for (int j = prev + 1; j <= t; ++j) {
            if (!((used[a] | used[b]) >> j & 1)) {
                next = j;
                break;
            }
        }
        if (next) {
            col[e] = next;
            used[a] |= 1ull << next;
            used[b] |= 1ull << next;
            if (e + 1 == m) {
                out.push_back(col);
                // stay on this edge to try its next color
            } else {
                ++e;
            }
        } else {
            col[e] = 0;
            --e;
        }
    }
    return out;
}

ColoringSpace equivalence_classes(const Graph& g, int t, long long cap) {
    ColoringSpace space;
    space.t = t;
    space.colorings = enumerate_colorings(g, t, cap);
    const int count = static_cast<int>(space.colorings.size());
    std::unordered_map<std::vector<int>, int, VecHash> index;
    index.reserve(count * 2);
    for (int i = 0; i < count; ++i) index.emplace(space.colorings[i], i);

    Dsu dsu(count);
    EdgeColoring cur{t, {}};
    for (int i = 0; i < count; ++i) {
        cur.color = space.colorings[i];
        for_each_swap(g, cur, [&](EdgeColoring next, const TraceStep&) {
            auto it = index.find(next.color);
            if (it == index.end())
                throw InvariantBreachError("oracle: swap left the enumerated space");
            dsu.unite(i, it->second);
        });
    }
    space.component.assign(count, -1);
    std::unordered_map<int, int> labels;
    for (int i = 0; i < count; ++i) {
        int root = dsu.find(i);
        auto [it, fresh] = labels.emplace(root, static_cast<int>(labels.size()));
        space.component[i] = it->second;
        (void)fresh;
    }
    space.class_count = static_cast<int>(labels.size());
    return space;
}

OracleAnswer oracle_equivalent(const Graph& g, int t, const EdgeColoring& a,
                               const EdgeColoring& b, long long cap) {
    if (a.t != t || b.t != t)
        throw PreconditionError("oracle_equivalent: palette mismatch");
    if (!validate_proper(g, a) || !validate_proper(g, b))
        throw PreconditionError("oracle_equivalent: improper input coloring");
    check_cap(g, t, cap);

    OracleAnswer ans;
    if (a.color == b.color) {
        ans.equivalent = true;
        return ans;
    }
    std::unordered_map<std::vector<int>, int, VecHash> index_of;
    std::vector<std::vector<int>> seen;
    std::vector<std::pair<int, TraceStep>> parent;
    std::queue<int> frontier;
    index_of.emplace(a.color, 0);
    seen.push_back(a.color);
    parent.push_back({-1, {}});
    frontier.push(0);
    int found = -1;
    EdgeColoring cur{t, {}};
    while (!frontier.empty() && found < 0) {
        int from = frontier.front();
        frontier.pop();
        cur.color = seen[from];
        for_each_swap(g, cur, [&](EdgeColoring next, const TraceStep& rec) {
            if (found >= 0 || index_of.count(next.color)) return;
            int id = static_cast<int>(seen.size());
            index_of.emplace(next.color, id);
            seen.push_back(std::move(next.color));
            parent.push_back({from, rec});
            if (seen.back() == b.color) {
                found = id;
                return;
            }
            frontier.push(id);
        });
    }
    if (found < 0) return ans; // not equivalent
    ans.equivalent = true;
    for (int at = found; at != 0; at = parent[at].first)
        ans.shortest.push_back(parent[at].second);
    std::reverse(ans.shortest.begin(), ans.shortest.end());
    return ans;
}

} // namespace kempe
