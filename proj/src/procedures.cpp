#include "kempe/procedures.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

// After a swap, re-pick any chosen color that became present at its vertex.
// Pinned vertices are set explicitly by the callers per the lemma at hand;
// this handles component endpoints the lemmas say nothing about.
void repair_missing(const Graph& g, const EdgeColoring& c, MissingAssignment& m) {
    for (int v = 0; v < g.n; ++v) {
        if (color_missing_at(g, c, v, m.at[v])) continue;
        auto miss = missing_colors(g, c, v);
        if (miss.empty())
            throw InvariantBreachError("repair_missing: vertex saturated all colors");
        m.at[v] = miss.front();
    }
}

MissingAssignment plain_copy(const MissingAssignment& m) {
    MissingAssignment out = m;
    out.policy = MissingPolicy::plain;
    return out;
}

void assert_missing(const Graph& g, const EdgeColoring& c, const MissingAssignment& m,
                    const char* where) {
    if (!missing_valid(g, c, m))
        throw InvariantBreachError(std::string(where) + ": missing assignment invalid");
}

void assert_proper(const Graph& g, const EdgeColoring& c, const char* where) {
    if (!validate_proper(g, c))
        throw InvariantBreachError(std::string(where) + ": intermediate coloring improper");
}

std::vector<int> sorted_union(std::vector<int> a, int extra) {
    a.push_back(extra);
    std::sort(a.begin(), a.end());
    return a;
}

Fan rotated(const Fan& fan, int rot) {
    Fan out = fan;
    std::rotate(out.spokes.begin(), out.spokes.begin() + rot, out.spokes.end());
    std::rotate(out.leaves.begin(), out.leaves.begin() + rot, out.leaves.end());
    return out;
}

Counts counts_of(const Graph& g, const EdgeColoring& c, const std::vector<int>& target) {
    auto cls = classify_edges(g, c, target);
    return {cls.bad, cls.ugly};
}

} // namespace

ReductionOutcome unsaturated_cycle_shift(const Graph& g, const EdgeColoring& c,
                                         const Fan& fan) {
    if (fan.kind != FanKind::cycle)
        throw PreconditionError("unsaturated_cycle_shift: fan is not a cycle");
    const int u = fan.center;
    const int mu = fan.missing.at[u];
    const int p = fan.p();

    // rotate so the component of K(color(ux_0), m(u)) through u misses x_p
    int rot = -1;
    for (int i = 0; i <= p; ++i) {
        ChainComponent comp = kempe_component(g, c, c.color[fan.spokes[i]], mu, u);
        if (!comp.contains_vertex(fan.leaves[i == 0 ? p : i - 1])) {
            rot = i;
            break;
        }
    }
    if (rot < 0)
        throw PreconditionError("unsaturated_cycle_shift: fan is saturated");
    Fan rf = rotated(fan, rot);
    const int c0 = c.color[rf.spokes[0]];
    const int xp = rf.leaves.back();

    ReductionOutcome out;
    EdgeColoring cur = c;

    // c0 = m(x_p) is missing at x_p, so x_p meets K(c0, mu) iff it has a
    // mu-colored edge; an untouched x_p already misses mu
    ChainComponent comp_c;
    bool has_c = edge_colored(g, cur, xp, mu) >= 0;
    if (has_c) {
        comp_c = kempe_component(g, cur, c0, mu, xp);
        if (comp_c.contains_vertex(u))
            throw InvariantBreachError("unsaturated_cycle_shift: rotation did not detach x_p");
        TraceStep rec;
        cur = kempe_swap(g, cur, c0, mu, xp, &rec);
        out.trace.push_back(rec);
        assert_proper(g, cur, "unsaturated_cycle_shift");
    }
    MissingAssignment m2 = plain_copy(fan.missing);
    m2.at[xp] = mu;
    repair_missing(g, cur, m2);
    assert_missing(g, cur, m2, "unsaturated_cycle_shift");

    Fan pf = build_fan(g, cur, m2, u, rf.leaves[0]);
    if (pf.kind != FanKind::path || pf.spokes != rf.spokes)
        throw InvariantBreachError("unsaturated_cycle_shift: rotated fan is not the expected path");
    ShiftResult sp = shift_path_fan(g, cur, pf);
    cur = sp.coloring;
    out.trace.insert(out.trace.end(), sp.trace.begin(), sp.trace.end());

    // the component at x_p grew by exactly the last spoke
    ChainComponent comp_c2 = kempe_component(g, cur, c0, mu, xp);
    std::vector<int> expect = has_c ? sorted_union(comp_c.edges, rf.spokes.back())
                                    : std::vector<int>{rf.spokes.back()};
    if (comp_c2.edges != expect)
        throw InvariantBreachError("unsaturated_cycle_shift: closing component is not C + ux_p");
    TraceStep rec;
    cur = kempe_swap(g, cur, c0, mu, xp, &rec);
    out.trace.push_back(rec);

    auto [want, m_final] = shift_target(g, c, fan);
    if (cur.color != want.color)
        throw InvariantBreachError("unsaturated_cycle_shift: result differs from shift target");
    out.coloring = std::move(cur);
    out.missing = std::move(m_final);
    out.effect = ReductionEffect::shift_realized;
    return out;
}

ReductionOutcome saturated_cycle_shift(const Graph& g, const EdgeColoring& c,
                                       const Fan& fan_u, const Fan& fan_v) {
    if (fan_u.kind != FanKind::cycle || fan_v.kind != FanKind::cycle)
        throw PreconditionError("saturated_cycle_shift: both fans must be cycles");
    const int u = fan_u.center;
    const int v = fan_u.leaves[0];
    if (fan_v.center != v || fan_v.leaves[0] != u || fan_v.spokes[0] != fan_u.spokes[0])
        throw PreconditionError("saturated_cycle_shift: fans do not share the edge uv");
    if (fan_u.missing.at != fan_v.missing.at)
        throw PreconditionError("saturated_cycle_shift: fans built from different assignments");
    const MissingAssignment& m = fan_u.missing;
    const int mu = m.at[u];
    const int mv = m.at[v];
    if (mu == mv)
        throw PreconditionError("saturated_cycle_shift: m(u) == m(v)");
    const int p = fan_u.p();
    const int q = fan_v.p();
    const int uv = fan_u.spokes[0];
    const int auv = c.color[uv];
    if (q < 2)
        throw PreconditionError("saturated_cycle_shift: q < 2");
    if (!is_saturated(g, c, fan_u))
        throw PreconditionError("saturated_cycle_shift: fan is not saturated");

    auto [want, m_final] = shift_target(g, c, fan_u);

    if (p == 1) {
        // the component of K(color(uv), m(v)) through u is the path x_1-u-v
        ChainComponent comp = kempe_component(g, c, auv, mv, u);
        std::vector<int> expect = {uv, fan_u.spokes[1]};
        std::sort(expect.begin(), expect.end());
        if (comp.edges != expect)
            throw InvariantBreachError("saturated_cycle_shift: p=1 component is not {uv, ux_1}");
        ReductionOutcome out;
        TraceStep rec;
        out.coloring = kempe_swap(g, c, auv, mv, u, &rec);
        out.trace.push_back(rec);
        if (out.coloring.color != want.color)
            throw InvariantBreachError("saturated_cycle_shift: p=1 result differs from target");
        out.missing = std::move(m_final);
        return out;
    }

    // leaf disjointness: holds on triangle-free and chordless graphs
    std::vector<char> is_x(g.n, 0);
    for (int i = 1; i <= p; ++i) is_x[fan_u.leaves[i]] = 1;
    for (int j = 1; j <= q; ++j)
        if (is_x[fan_v.leaves[j]])
            throw ClassViolationError(
                "saturated_cycle_shift: fan leaf sets intersect at vertex " +
                std::to_string(fan_v.leaves[j]) +
                " (graph is neither triangle-free nor chordless here)");
    const int yq = fan_v.leaves[q];
    const int xp = fan_u.leaves[p];
    if (yq == xp)
        throw ClassViolationError("saturated_cycle_shift: y_q == x_p");

    // P contains u, v, y_1 and (saturation) x_p, but not y_q
    ChainComponent comp_p = kempe_component(g, c, auv, mu, u);
    if (!comp_p.contains_vertex(xp) || !comp_p.contains_vertex(fan_v.leaves[1]) ||
        !comp_p.contains_vertex(v))
        throw InvariantBreachError("saturated_cycle_shift: P misses a required vertex");
    if (comp_p.contains_vertex(yq))
        throw InvariantBreachError("saturated_cycle_shift: P contains y_q");

    // edges and vertices the swapped components must avoid
    std::vector<char> fan_edge(g.edge_count(), 0);
    for (int e : fan_u.spokes) fan_edge[e] = 1;
    for (int e : fan_v.spokes) fan_edge[e] = 1;
    std::vector<char> protected_v(g.n, 0);
    protected_v[u] = protected_v[v] = 1;
    for (int i = 1; i <= p; ++i) protected_v[fan_u.leaves[i]] = 1;
    for (int j = 1; j < q; ++j) protected_v[fan_v.leaves[j]] = 1;
    auto check_avoids = [&](const ChainComponent& comp, const char* name) {
        for (int e : comp.edges)
            if (fan_edge[e])
                throw InvariantBreachError(std::string("saturated_cycle_shift: ") + name +
                                           " meets a fan edge");
        if (comp.shape == ChainShape::path)
            for (int ep : comp.endpoints)
                if (protected_v[ep])
                    throw InvariantBreachError(std::string("saturated_cycle_shift: ") + name +
                                               " ends on a fan vertex");
    };

    ReductionOutcome out;
    EdgeColoring cur = c;

    // swap C, the K(color(uv), m(u)) component at y_q, freeing m(u) there
    ChainComponent comp_c;
    bool has_c = edge_colored(g, cur, yq, mu) >= 0;
    if (has_c) {
        comp_c = kempe_component(g, cur, auv, mu, yq);
        check_avoids(comp_c, "C");
        TraceStep rec;
        cur = kempe_swap(g, cur, auv, mu, yq, &rec);
        out.trace.push_back(rec);
        assert_proper(g, cur, "saturated_cycle_shift");
    }
    MissingAssignment m1 = plain_copy(m);
    m1.at[yq] = mu;
    repair_missing(g, cur, m1);
    assert_missing(g, cur, m1, "saturated_cycle_shift (after C)");

    Fan fu1 = build_fan(g, cur, m1, u, v);
    if (fu1.kind != FanKind::cycle || fu1.spokes != fan_u.spokes)
        throw InvariantBreachError("saturated_cycle_shift: swapping C disturbed the fan");

    auto swap_c_back = [&]() {
        if (!has_c) return;
        ChainComponent back = kempe_component(g, cur, auv, mu, yq);
        if (back.edges != comp_c.edges)
            throw InvariantBreachError("saturated_cycle_shift: C changed before the closing swap");
        TraceStep rec;
        cur = kempe_swap(g, cur, auv, mu, yq, &rec);
        out.trace.push_back(rec);
    };

    if (!is_saturated(g, cur, fu1)) {
        // Case 1: one Lemma 2.2 shift, then restore C
        ReductionOutcome inner = unsaturated_cycle_shift(g, cur, fu1);
        cur = inner.coloring;
        out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
        swap_c_back();
    } else {
        // Case 2: the six-coloring route of Lemma 2.3
        ChainComponent comp_uv = kempe_component(g, cur, mu, mv, u);
        if (!comp_uv.contains_vertex(v))
            throw InvariantBreachError("saturated_cycle_shift: K(m(u),m(v)) at u misses v");
        if (comp_uv.contains_vertex(yq))
            throw InvariantBreachError("saturated_cycle_shift: K(m(u),m(v)) at u reaches y_q");

        ChainComponent comp_c2;
        bool has_c2 = edge_colored(g, cur, yq, mv) >= 0;
        if (has_c2) {
            comp_c2 = kempe_component(g, cur, mu, mv, yq);
            check_avoids(comp_c2, "C'");
            TraceStep rec;
            cur = kempe_swap(g, cur, mu, mv, yq, &rec);
            out.trace.push_back(rec);
            assert_proper(g, cur, "saturated_cycle_shift");
        }
        MissingAssignment m2 = plain_copy(m1);
        m2.at[yq] = mv;
        repair_missing(g, cur, m2);
        assert_missing(g, cur, m2, "saturated_cycle_shift (after C')");

        // X_v(alpha_2, u) is now the path (vu, vy_1, ..., vy_q)
        Fan fv2 = build_fan(g, cur, m2, v, u);
        if (fv2.kind != FanKind::path || fv2.spokes != fan_v.spokes)
            throw InvariantBreachError("saturated_cycle_shift: X_v(a2,u) is not the expected path");
        ShiftResult sp1 = shift_path_fan(g, cur, fv2);
        cur = sp1.coloring;
        out.trace.insert(out.trace.end(), sp1.trace.begin(), sp1.trace.end());
        MissingAssignment m3 = sp1.missing;

        // X_u(alpha_3, x_1) is the path (ux_1, ..., ux_p)
        Fan fu3 = build_fan(g, cur, m3, u, fan_u.leaves[1]);
        std::vector<int> tail(fan_u.spokes.begin() + 1, fan_u.spokes.end());
        if (fu3.kind != FanKind::path || fu3.spokes != tail)
            throw InvariantBreachError("saturated_cycle_shift: X_u(a3,x_1) is not the expected path");
        ShiftResult sp2 = shift_path_fan(g, cur, fu3);
        cur = sp2.coloring;
        out.trace.insert(out.trace.end(), sp2.trace.begin(), sp2.trace.end());
        MissingAssignment m4 = sp2.missing;

        // the K(m(u), m(v)) component through u is now exactly C' + {uv, vy_q}
        ChainComponent comp4 = kempe_component(g, cur, mu, mv, u);
        std::vector<int> expect = has_c2 ? comp_c2.edges : std::vector<int>{};
        expect.push_back(uv);
        expect.push_back(fan_v.spokes[q]);
        std::sort(expect.begin(), expect.end());
        if (comp4.edges != expect)
            throw InvariantBreachError("saturated_cycle_shift: component is not C' + {uv, vy_q}");
        TraceStep rec;
        cur = kempe_swap(g, cur, mu, mv, u, &rec);
        out.trace.push_back(rec);
        assert_proper(g, cur, "saturated_cycle_shift");

        MissingAssignment m5 = m4;
        if (!color_missing_at(g, cur, u, mu))
            throw InvariantBreachError("saturated_cycle_shift: m(u) not available for alpha_5");
        m5.at[u] = mu;
        repair_missing(g, cur, m5);
        assert_missing(g, cur, m5, "saturated_cycle_shift (alpha_5)");

        // X_v(alpha_5, y_1) = (vy_1, vy_q, vy_{q-1}, ..., vy_2), a non-saturated cycle
        Fan fv5 = build_fan(g, cur, m5, v, fan_v.leaves[1]);
        std::vector<int> spokes5{fan_v.spokes[1]};
        for (int j = q; j >= 2; --j) spokes5.push_back(fan_v.spokes[j]);
        if (fv5.kind != FanKind::cycle || fv5.spokes != spokes5)
            throw InvariantBreachError("saturated_cycle_shift: X_v(a5,y_1) is not the expected cycle");
        if (is_saturated(g, cur, fv5))
            throw InvariantBreachError("saturated_cycle_shift: X_v(a5,y_1) unexpectedly saturated");
        ReductionOutcome inner = unsaturated_cycle_shift(g, cur, fv5);
        cur = inner.coloring;
        out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());

        swap_c_back();
    }

    if (cur.color != want.color)
        throw InvariantBreachError("saturated_cycle_shift: result differs from shift target");
    out.coloring = std::move(cur);
    out.missing = std::move(m_final);
    out.effect = ReductionEffect::shift_realized;
    return out;
}

namespace {

// Common tail of the Property 3.3 / 3.6 reductions: run the shift, then
// check the color-1 class shrank by exactly the ugly edge.
ReductionOutcome finish_ugly_reduction(const Graph& g, const EdgeColoring& before_col,
                                       const std::vector<int>& target, int ugly_edge,
                                       EdgeColoring result, MissingAssignment missing,
                                       KempeTrace trace, const char* who) {
    std::vector<int> before_class = color_class(before_col, 1);
    std::vector<int> after_class = color_class(result, 1);
    std::vector<int> expect;
    for (int e : before_class)
        if (e != ugly_edge) expect.push_back(e);
    if (after_class != expect)
        throw InvariantBreachError(std::string(who) + ": M(result,1) != M(input,1) - {uv}");

    ReductionOutcome out;
    out.before = counts_of(g, before_col, target);
    out.after = counts_of(g, result, target);
    if (out.after->bad > out.before->bad || out.after->ugly != out.before->ugly - 1)
        throw InvariantBreachError(std::string(who) + ": counts did not improve as claimed");
    out.coloring = std::move(result);
    out.missing = std::move(missing);
    out.trace = std::move(trace);
    out.effect = ReductionEffect::ugly_decreased;
    return out;
}

} // namespace

ReductionOutcome resolve_noncycle_ugly(const Graph& g, const EdgeColoring& c,
                                       const MissingAssignment& m,
                                       const std::vector<int>& target_class,
                                       int ugly_edge, int side) {
    if (c.color[ugly_edge] != 1)
        throw PreconditionError("resolve_noncycle_ugly: edge is not colored 1");
    for (int e : target_class)
        if (e == ugly_edge)
            throw PreconditionError("resolve_noncycle_ugly: edge is in the target class");
    const int u = side;
    const int v = g.other_end(ugly_edge, u);
    Fan fan = build_fan(g, c, m, u, v);
    if (fan.kind == FanKind::cycle)
        throw PreconditionError("resolve_noncycle_ugly: fan is a cycle; use the cycle machinery");

    if (fan.kind == FanKind::path) {
        ShiftResult sp = shift_path_fan(g, c, fan);
        return finish_ugly_reduction(g, c, target_class, ugly_edge,
                                     std::move(sp.coloring), std::move(sp.missing),
                                     std::move(sp.trace), "resolve_noncycle_ugly");
    }

    // comet: m(x_p) = m(x_{q-1}) = color(ux_q); break it at the reentry spoke
    const int q = fan.reentry;
    const int p = fan.p();
    const int mu = fan.missing.at[u];
    const int cq = c.color[fan.spokes[q]];
    if (fan.missing.at[fan.leaves[p]] != cq || fan.missing.at[fan.leaves[q - 1]] != cq)
        throw InvariantBreachError("resolve_noncycle_ugly: comet reentry colors inconsistent");

    ChainComponent comp = kempe_component(g, c, mu, cq, u);
    if (std::find(comp.edges.begin(), comp.edges.end(), fan.spokes[q]) == comp.edges.end())
        throw InvariantBreachError("resolve_noncycle_ugly: component misses ux_q");
    bool meets_prev = comp.contains_vertex(fan.leaves[q - 1]);
    KempeTrace trace;
    TraceStep rec;
    EdgeColoring cur = kempe_swap(g, c, mu, cq, u, &rec);
    trace.push_back(rec);
    assert_proper(g, cur, "resolve_noncycle_ugly");

    MissingAssignment m1 = plain_copy(fan.missing);
    m1.at[u] = cq;
    if (meets_prev) m1.at[fan.leaves[q - 1]] = mu;
    repair_missing(g, cur, m1);
    assert_missing(g, cur, m1, "resolve_noncycle_ugly");

    Fan pf = build_fan(g, cur, m1, u, v);
    std::vector<int> expect_spokes(fan.spokes.begin(),
                                   meets_prev ? fan.spokes.end() : fan.spokes.begin() + q);
    if (pf.kind != FanKind::path || pf.spokes != expect_spokes)
        throw InvariantBreachError("resolve_noncycle_ugly: truncated fan is not the expected path");
    ShiftResult sp = shift_path_fan(g, cur, pf);
    trace.insert(trace.end(), sp.trace.begin(), sp.trace.end());
    return finish_ugly_reduction(g, c, target_class, ugly_edge,
                                 std::move(sp.coloring), std::move(sp.missing),
                                 std::move(trace), "resolve_noncycle_ugly");
}

ReductionOutcome resolve_chord_ugly(const Graph& g, const EdgeColoring& c,
                                    const MissingAssignment& m,
                                    const std::vector<int>& target_class,
                                    int ugly_edge, int side) {
    if (c.color[ugly_edge] != 1)
        throw PreconditionError("resolve_chord_ugly: edge is not colored 1");
    for (int e : target_class)
        if (e == ugly_edge)
            throw PreconditionError("resolve_chord_ugly: edge is in the target class");
    const int u = side;
    const int v = g.other_end(ugly_edge, u);
    Fan fan = build_fan(g, c, m, u, v);
    if (fan.kind != FanKind::cycle)
        throw PreconditionError("resolve_chord_ugly: fan is not a cycle");
    const int p = fan.p();
    const int xp = fan.leaves[p];
    if (!g.has_edge(v, xp))
        throw PreconditionError("resolve_chord_ugly: vx_p is not an edge");

    const int mu = fan.missing.at[u];
    const int cp = c.color[fan.spokes[p]];
    ChainComponent comp = kempe_component(g, c, mu, cp, u);
    if (std::find(comp.edges.begin(), comp.edges.end(), fan.spokes[p]) == comp.edges.end())
        throw InvariantBreachError("resolve_chord_ugly: component misses ux_p");
    // guaranteed not to happen on chordless graphs at minimal colorings; at
    // other colorings the caller treats this as "reduction unavailable"
    if (comp.contains_vertex(fan.leaves[p - 1]))
        throw ClassViolationError(
            "resolve_chord_ugly: K(m(u), color(ux_p)) at u reaches x_{p-1}");

    KempeTrace trace;
    TraceStep rec;
    EdgeColoring cur = kempe_swap(g, c, mu, cp, u, &rec);
    trace.push_back(rec);
    assert_proper(g, cur, "resolve_chord_ugly");

    MissingAssignment m1 = plain_copy(fan.missing);
    m1.at[u] = cp;
    repair_missing(g, cur, m1);
    assert_missing(g, cur, m1, "resolve_chord_ugly");

    Fan pf = build_fan(g, cur, m1, u, v);
    std::vector<int> expect_spokes(fan.spokes.begin(), fan.spokes.end() - 1);
    if (pf.kind != FanKind::path || pf.spokes != expect_spokes)
        throw InvariantBreachError("resolve_chord_ugly: truncated fan is not the expected path");
    ShiftResult sp = shift_path_fan(g, cur, pf);
    trace.insert(trace.end(), sp.trace.begin(), sp.trace.end());
    return finish_ugly_reduction(g, c, target_class, ugly_edge,
                                 std::move(sp.coloring), std::move(sp.missing),
                                 std::move(trace), "resolve_chord_ugly");
}

ReductionOutcome recolor_isolated_bad(const Graph& g, const EdgeColoring& c,
                                      const std::vector<int>& target_class,
                                      int bad_edge) {
    auto [x, y] = g.edges[bad_edge];
    if (c.color[bad_edge] == 1)
        throw PreconditionError("recolor_isolated_bad: edge already colored 1");
    if (std::find(target_class.begin(), target_class.end(), bad_edge) == target_class.end())
        throw PreconditionError("recolor_isolated_bad: edge is not in the target class");
    if (edge_colored(g, c, x, 1) >= 0 || edge_colored(g, c, y, 1) >= 0)
        throw PreconditionError("recolor_isolated_bad: an endpoint touches color 1");

    ChainComponent comp = kempe_component(g, c, c.color[bad_edge], 1, x);
    if (comp.edges != std::vector<int>{bad_edge})
        throw InvariantBreachError("recolor_isolated_bad: component is not the single edge");
    ReductionOutcome out;
    out.before = counts_of(g, c, target_class);
    TraceStep rec;
    out.coloring = kempe_swap(g, c, c.color[bad_edge], 1, x, &rec);
    out.trace.push_back(rec);
    out.after = counts_of(g, out.coloring, target_class);
    if (out.after->bad != out.before->bad - 1 || out.after->ugly != out.before->ugly)
        throw InvariantBreachError("recolor_isolated_bad: counts did not improve as claimed");
    out.missing = choose_missing(g, out.coloring, MissingPolicy::plain);
    out.effect = ReductionEffect::bad_decreased;
    return out;
}

} // namespace kempe
