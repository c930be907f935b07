#include "kempe/fan.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

Fan build_fan(const Graph& g, const EdgeColoring& c, const MissingAssignment& m,
              int u, int v) {
    int e0 = g.find_edge(u, v);
    if (e0 < 0) throw PreconditionError("build_fan: uv is not an edge");
    if (!missing_valid(g, c, m))
        throw PreconditionError("build_fan: invalid missing assignment");

    Fan fan;
    fan.center = u;
    fan.missing = m;
    fan.spokes.push_back(e0);
    fan.leaves.push_back(v);
    std::vector<int> pos(g.edge_count(), -1); // spoke index by edge
    pos[e0] = 0;
    for (;;) {
        int leaf = fan.leaves.back();
        int want = m.at[leaf];
        int next = edge_colored(g, c, u, want);
        if (next < 0) {
            fan.kind = FanKind::path;
            break;
        }
        if (pos[next] >= 0) {
            if (pos[next] == 0) {
                fan.kind = FanKind::cycle;
            } else {
                fan.kind = FanKind::comet;
                fan.reentry = pos[next];
            }
            break;
        }
        pos[next] = static_cast<int>(fan.spokes.size());
        fan.spokes.push_back(next);
        fan.leaves.push_back(g.other_end(next, u));
    }
    return fan;
}

std::vector<std::pair<int, int>> fan_digraph(const Graph& g, const EdgeColoring& c,
                                             const MissingAssignment& m, int u) {
    std::vector<std::pair<int, int>> arcs;
    for (int e : g.incident[u]) {
        int w = g.other_end(e, u);
        int to = edge_colored(g, c, u, m.at[w]);
        if (to >= 0) arcs.emplace_back(e, to);
    }
    return arcs;
}

std::pair<EdgeColoring, MissingAssignment>
shift_target(const Graph& g, const EdgeColoring& c, const Fan& fan) {
    if (fan.kind == FanKind::comet)
        throw PreconditionError("shift_target: comet fans have no shift");
    EdgeColoring out = c;
    MissingAssignment m2 = fan.missing;
    for (size_t i = 0; i < fan.spokes.size(); ++i) {
        out.color[fan.spokes[i]] = fan.missing.at[fan.leaves[i]];
        m2.at[fan.leaves[i]] = c.color[fan.spokes[i]];
    }
    m2.at[fan.center] = fan.kind == FanKind::path ? c.color[fan.spokes[0]]
                                                  : fan.missing.at[fan.center];
    m2.policy = MissingPolicy::plain; // Definition-2 updates ignore the one_last rule
    if (!validate_proper(g, out))
        throw InvariantBreachError("shift_target: result not proper");
    if (!missing_valid(g, out, m2))
        throw InvariantBreachError("shift_target: result missing assignment invalid");
    return {std::move(out), std::move(m2)};
}

ShiftResult shift_path_fan(const Graph& g, const EdgeColoring& c, const Fan& fan) {
    if (fan.kind != FanKind::path)
        throw PreconditionError("shift_path_fan: fan is not a path");
    ShiftResult res;
    res.coloring = c;
    for (int i = fan.p(); i >= 0; --i) {
        int spoke = fan.spokes[i];
        int leaf = fan.leaves[i];
        int from = res.coloring.color[spoke];
        int to = fan.missing.at[leaf];
        // each step recolors exactly one edge: `to` is missing at both the
        // center (freed by the previous step, or fan-terminal) and the leaf
        ChainComponent comp = kempe_component(g, res.coloring, from, to, leaf);
        if (comp.edges.size() != 1 || comp.edges[0] != spoke)
            throw InvariantBreachError("shift_path_fan: spoke component is not a single edge");
        TraceStep rec;
        res.coloring = kempe_swap(g, res.coloring, from, to, leaf, &rec);
        res.trace.push_back(rec);
    }
    auto [want, m2] = shift_target(g, c, fan);
    if (res.coloring.color != want.color)
        throw InvariantBreachError("shift_path_fan: trace result differs from shift target");
    res.missing = std::move(m2);
    return res;
}

bool is_saturated(const Graph& g, const EdgeColoring& c, const Fan& fan) {
    if (fan.kind != FanKind::cycle)
        throw PreconditionError("is_saturated: fan is not a cycle");
    int u = fan.center;
    int mu = fan.missing.at[u];
    int p = fan.p();
    for (int i = 0; i <= p; ++i) {
        int prev_leaf = fan.leaves[i == 0 ? p : i - 1];
        ChainComponent comp = kempe_component(g, c, c.color[fan.spokes[i]], mu, u);
        if (!comp.contains_vertex(prev_leaf)) return false;
    }
    return true;
}

} // namespace kempe
