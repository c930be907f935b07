#include "kempe/coloring.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

bool validate_proper(const Graph& g, const EdgeColoring& c,
                     std::vector<Violation>* violations) {
    if (static_cast<int>(c.color.size()) != g.edge_count())
        throw PreconditionError("coloring covers " + std::to_string(c.color.size()) +
                                " edges, graph has " + std::to_string(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.color[e] < 1 || c.color[e] > c.t)
            throw PreconditionError("edge " + std::to_string(e) + " colored outside 1..t");
    bool ok = true;
    for (int v = 0; v < g.n; ++v) {
        const auto& inc = g.incident[v];
        for (size_t i = 0; i < inc.size(); ++i) {
            for (size_t j = i + 1; j < inc.size(); ++j) {
                if (c.color[inc[i]] == c.color[inc[j]]) {
                    ok = false;
                    if (violations) violations->push_back({inc[i], inc[j], v});
                }
            }
        }
    }
    return ok;
}

std::vector<int> missing_colors(const Graph& g, const EdgeColoring& c, int v) {
    std::vector<char> present(c.t + 1, 0);
    for (int e : g.incident[v]) present[c.color[e]] = 1;
    std::vector<int> out;
    for (int j = 1; j <= c.t; ++j)
        if (!present[j]) out.push_back(j);
    return out;
}

MissingAssignment choose_missing(const Graph& g, const EdgeColoring& c,
                                 MissingPolicy policy) {
    MissingAssignment m;
    m.policy = policy;
    m.at.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto miss = missing_colors(g, c, v);
        if (miss.empty())
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " has no missing color (deg == t)");
        if (policy == MissingPolicy::plain) {
            m.at[v] = miss.front();
        } else {
            // one_last: 1 only when it is the sole missing color
            int pick = 0;
            for (int j : miss)
                if (j != 1) { pick = j; break; }
            m.at[v] = pick == 0 ? 1 : pick;
        }
    }
    return m;
}

bool missing_valid(const Graph& g, const EdgeColoring& c, const MissingAssignment& m) {
    if (static_cast<int>(m.at.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        int chosen = m.at[v];
        if (chosen < 1 || chosen > c.t) return false;
        auto miss = missing_colors(g, c, v);
        if (std::find(miss.begin(), miss.end(), chosen) == miss.end()) return false;
        if (m.policy == MissingPolicy::one_last) {
            bool sole = miss.size() == 1 && miss[0] == 1;
            if ((chosen == 1) != sole) return false;
        }
    }
    return true;
}

bool ChainComponent::contains_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

ChainComponent kempe_component(const Graph& g, const EdgeColoring& c,
                               int color_c, int color_d, int anchor) {
    if (color_c == color_d || color_c < 1 || color_c > c.t || color_d < 1 || color_d > c.t)
        throw PreconditionError("kempe_component: bad color pair");
    if (anchor < 0 || anchor >= g.n)
        throw PreconditionError("kempe_component: anchor out of range");
    if (edge_colored(g, c, anchor, color_c) < 0 &&
        edge_colored(g, c, anchor, color_d) < 0)
        throw PreconditionError("kempe_component: anchor touches neither color");

    ChainComponent comp;
    comp.c = color_c;
    comp.d = color_d;
    std::vector<int> stack{anchor};
    std::vector<char> vseen(g.n, 0);
    vseen[anchor] = 1;
    std::vector<char> eseen(g.edge_count(), 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.vertices.push_back(v);
        for (int color : {color_c, color_d}) {
            int e = edge_colored(g, c, v, color);
            if (e < 0 || eseen[e]) continue;
            eseen[e] = 1;
            comp.edges.push_back(e);
            int w = g.other_end(e, v);
            if (!vseen[w]) {
                vseen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(comp.edges.begin(), comp.edges.end());
    std::sort(comp.vertices.begin(), comp.vertices.end());

    // properness: every vertex touches at most one edge of each color, so the
    // component is a path (two degree-1 vertices) or an even cycle (none)
    std::vector<int> deg1;
    for (int v : comp.vertices) {
        int d = 0;
        for (int color : {color_c, color_d})
            if (edge_colored(g, c, v, color) >= 0) ++d;
        if (d == 1) deg1.push_back(v);
    }
    if (deg1.empty()) {
        comp.shape = ChainShape::even_cycle;
    } else if (deg1.size() == 2) {
        comp.shape = ChainShape::path;
        comp.endpoints = {deg1[0], deg1[1]};
    } else {
        throw InvariantBreachError("kempe_component: improper input coloring");
    }
    return comp;
}

EdgeColoring kempe_swap(const Graph& g, const EdgeColoring& c,
                        int color_c, int color_d, int anchor, TraceStep* record) {
    ChainComponent comp = kempe_component(g, c, color_c, color_d, anchor);
    EdgeColoring out = c;
    for (int e : comp.edges)
        out.color[e] = out.color[e] == color_c ? color_d : color_c;
    if (record) *record = {color_c, color_d, anchor};
    return out;
}

EdgeColoring apply_trace(const Graph& g, const EdgeColoring& start,
                         const KempeTrace& trace) {
    EdgeColoring cur = start;
    for (size_t i = 0; i < trace.size(); ++i) {
        const TraceStep& s = trace[i];
        try {
            cur = kempe_swap(g, cur, s.c, s.d, s.anchor);
        } catch (const PreconditionError& e) {
            throw TraceError(static_cast<int>(i),
                             "trace step " + std::to_string(i) + ": " + e.what());
        }
    }
    return cur;
}

bool verify_trace(const Graph& g, const EdgeColoring& start,
                  const KempeTrace& trace, const EdgeColoring& target) {
    try {
        return apply_trace(g, start, trace).color == target.color;
    } catch (const TraceError&) {
        return false;
    }
}

KempeTrace reversed(const KempeTrace& trace) {
    return KempeTrace(trace.rbegin(), trace.rend());
}

EdgeClassification classify_edges(const Graph& g, const EdgeColoring& c,
                                  const std::vector<int>& target_class) {
    std::vector<char> in_class(g.edge_count(), 0);
    std::vector<char> covered(g.n, 0);
    for (int e : target_class) {
        if (e < 0 || e >= g.edge_count())
            throw PreconditionError("classify_edges: target edge out of range");
        in_class[e] = 1;
        auto [u, v] = g.edges[e];
        if (covered[u] || covered[v])
            throw PreconditionError("classify_edges: target class is not a matching");
        covered[u] = covered[v] = 1;
    }
    EdgeClassification out;
    out.status.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        bool one = c.color[e] == 1;
        if (in_class[e] && one) {
            out.status[e] = EdgeStatus::good;
            ++out.good;
        } else if (in_class[e]) {
            out.status[e] = EdgeStatus::bad;
            ++out.bad;
        } else if (one) {
            out.status[e] = EdgeStatus::ugly;
            ++out.ugly;
        } else {
            out.status[e] = EdgeStatus::neutral;
        }
    }
    return out;
}

int edge_colored(const Graph& g, const EdgeColoring& c, int v, int color) {
    for (int e : g.incident[v])
        if (c.color[e] == color) return e;
    return -1;
}

bool color_missing_at(const Graph& g, const EdgeColoring& c, int v, int color) {
    return edge_colored(g, c, v, color) < 0;
}

std::vector<int> color_class(const EdgeColoring& c, int j) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(c.color.size()); ++e)
        if (c.color[e] == j) out.push_back(e);
    return out;
}

} // namespace kempe
