#include "kempe/engine.hpp"

#include <algorithm>
#include <string>

#include "kempe/errors.hpp"
#include "kempe/fan.hpp"

namespace kempe {

std::optional<EdgeColoring> exact_coloring(const Graph& g, int t, long long max_nodes) {
    if (t < 0) throw PreconditionError("exact_coloring: negative palette");
    const int m = g.edge_count();
    if (m == 0) return EdgeColoring{t, {}};
    if (t == 0) return std::nullopt;

    std::vector<uint64_t> used(g.n, 0); // color bitmask per vertex
    if (t > 63) throw PreconditionError("exact_coloring: palette too large");
    EdgeColoring col{t, std::vector<int>(m, 0)};
    int e = 0;
    long long nodes = 0;
    while (true) {
        if (max_nodes >= 0 && ++nodes > max_nodes)
            throw CapExceededError("exact_coloring: node budget exceeded");
        auto [a, b] = g.edges[e];
        int prev = col.color[e];
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
            col.color[e] = next;
            used[a] |= 1ull << next;
            used[b] |= 1ull << next;
            if (++e == m) return col;
        } else {
            col.color[e] = 0;
            if (--e < 0) return std::nullopt;
        }
    }
}

SolverResult find_delta_coloring(const Graph& g) {
    int delta = max_degree(g);
    SolverResult res;
    res.palette = delta;
    res.coloring = exact_coloring(g, delta);
    return res;
}

namespace {

struct EngineChecks {
    bool triangle_free;
    bool chordless;
};

EngineChecks check_class(const Graph& g) {
    EngineChecks ec{is_triangle_free(g), false};
    ec.chordless = is_chordless(g);
    if (!ec.triangle_free && !ec.chordless)
        throw ClassViolationError("graph is neither triangle-free nor chordless");
    return ec;
}

void check_palette(const Graph& g, const EdgeColoring& c, int want, const char* who) {
    if (c.t != want)
        throw PreconditionError(std::string(who) + ": palette is " + std::to_string(c.t) +
                                ", expected " + std::to_string(want));
    if (!validate_proper(g, c))
        throw PreconditionError(std::string(who) + ": coloring is not proper");
}

// One descent action on the current state; returns the outcome of whichever
// reduction fires first in the (a)-(d) priority order.
ReductionOutcome descent_step(const Graph& g, bool chordless, const EdgeColoring& cur,
                              const std::vector<int>& target,
                              const EdgeClassification& cls) {
    MissingAssignment m = choose_missing(g, cur, MissingPolicy::one_last);

    std::vector<int> bad_edges, ugly_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (cls.status[e] == EdgeStatus::bad) bad_edges.push_back(e);
        if (cls.status[e] == EdgeStatus::ugly) ugly_edges.push_back(e);
    }

    // (a) bad edge with no color-1 edge at either end
    for (int e : bad_edges) {
        auto [x, y] = g.edges[e];
        if (edge_colored(g, cur, x, 1) < 0 && edge_colored(g, cur, y, 1) < 0)
            return recolor_isolated_bad(g, cur, target, e);
    }

    // (b) ugly edge with a non-cycle fan on either side
    for (int e : ugly_edges) {
        auto [x, y] = g.edges[e];
        for (int side : {std::min(x, y), std::max(x, y)}) {
            Fan fan = build_fan(g, cur, m, side, g.other_end(e, side));
            if (fan.kind != FanKind::cycle)
                return resolve_noncycle_ugly(g, cur, m, target, e, side);
        }
    }

    // (c) chordless escape: cycle fan whose last leaf is adjacent to the
    // near endpoint. A ClassViolation from one candidate just skips it.
    if (chordless) {
        for (int e : ugly_edges) {
            auto [x, y] = g.edges[e];
            for (int side : {std::min(x, y), std::max(x, y)}) {
                int other = g.other_end(e, side);
                Fan fan = build_fan(g, cur, m, side, other);
                if (fan.kind == FanKind::cycle && g.has_edge(other, fan.leaves.back())) {
                    try {
                        return resolve_chord_ugly(g, cur, m, target, e, side);
                    } catch (const ClassViolationError&) {
                    }
                }
            }
        }
    }

    // (d) main step: bad edge wv with free endpoint w, ugly edge uv at v
    for (int wv : bad_edges) {
        auto [x, y] = g.edges[wv];
        int w = -1;
        if (m.at[x] == 1) w = x;
        else if (m.at[y] == 1) w = y;
        if (w < 0) continue;
        int v = g.other_end(wv, w);
        int ugly = edge_colored(g, cur, v, 1);
        if (ugly < 0)
            throw InvariantBreachError("descent: free-endpoint bad edge with no ugly edge at v "
                                       "(step (a) should have fired)");
        int u = g.other_end(ugly, v);

        Fan fan_u = build_fan(g, cur, m, u, v);
        if (fan_u.kind != FanKind::cycle)
            throw InvariantBreachError("descent: fan at u is not a cycle after (b)");
        int xp = fan_u.leaves.back();
        if (g.has_edge(v, xp))
            throw InvariantBreachError("descent: vx_p is an edge after (c)");
        if (xp == w)
            throw InvariantBreachError("descent: fan ends at the free endpoint w");

        ReductionOutcome shift;
        if (fan_u.p() == 1) {
            // the K(1, m(v)) component through u is the path x_1 - u - v
            ChainComponent comp = kempe_component(g, cur, 1, m.at[v], u);
            std::vector<int> expect{ugly, fan_u.spokes[1]};
            std::sort(expect.begin(), expect.end());
            if (comp.edges != expect)
                throw InvariantBreachError("descent: p=1 component is not {uv, ux_1}");
            TraceStep rec;
            shift.coloring = kempe_swap(g, cur, 1, m.at[v], u, &rec);
            shift.trace.push_back(rec);
            auto [want, m2] = shift_target(g, cur, fan_u);
            if (shift.coloring.color != want.color)
                throw InvariantBreachError("descent: p=1 shift differs from target");
            shift.missing = std::move(m2);
        } else if (!is_saturated(g, cur, fan_u)) {
            shift = unsaturated_cycle_shift(g, cur, fan_u);
        } else {
            Fan fan_v = build_fan(g, cur, m, v, u);
            if (fan_v.kind != FanKind::cycle)
                throw InvariantBreachError("descent: fan at v is not a cycle after (b)");
            if (fan_v.p() < 2)
                throw InvariantBreachError("descent: q < 2 at the main step");
            shift = saturated_cycle_shift(g, cur, fan_u, fan_v);
        }

        // color 1 must now be missing at both w and v; wv becomes good
        if (edge_colored(g, shift.coloring, w, 1) >= 0 ||
            edge_colored(g, shift.coloring, v, 1) >= 0)
            throw InvariantBreachError("descent: color 1 not free at w and v after the shift");
        TraceStep rec;
        EdgeColoring done = kempe_swap(g, shift.coloring, shift.coloring.color[wv], 1, w, &rec);
        if (done.color[wv] != 1)
            throw InvariantBreachError("descent: final recolor did not make wv good");
        ReductionOutcome out;
        out.before = Counts{cls.bad, cls.ugly};
        auto cls2 = classify_edges(g, done, target);
        out.after = Counts{cls2.bad, cls2.ugly};
        out.coloring = std::move(done);
        out.missing = choose_missing(g, out.coloring, MissingPolicy::plain);
        out.trace = std::move(shift.trace);
        out.trace.push_back(rec);
        out.effect = ReductionEffect::bad_decreased;
        return out;
    }

    throw InvariantBreachError("descent stall: no reduction applies while bad+ugly > 0");
}

} // namespace

AlignResult align_first_class(const Graph& g, const EdgeColoring& beta,
                              const std::vector<int>& target) {
    check_palette(g, beta, max_degree(g) + 1, "align_first_class");
    classify_edges(g, beta, target); // validates the matching

    bool chordless = is_chordless(g);
    AlignResult res;
    res.coloring = beta;
    const long long watchdog =
        static_cast<long long>(g.edge_count() + 1) * (g.edge_count() + 1);
    long long iter = 0;
    while (true) {
        auto cls = classify_edges(g, res.coloring, target);
        res.descent_log.push_back({cls.bad, cls.ugly});
        if (cls.bad == 0 && cls.ugly == 0) break;
        if (++iter > watchdog)
            throw InvariantBreachError("align_first_class: watchdog exceeded");

        ReductionOutcome step = descent_step(g, chordless, res.coloring, target, cls);
        auto next = classify_edges(g, step.coloring, target);
        Counts before{cls.bad, cls.ugly}, after{next.bad, next.ugly};
        if (!after.lex_less(before))
            throw InvariantBreachError("align_first_class: step did not decrease (bad, ugly)");
        if (!verify_trace(g, res.coloring, step.trace, step.coloring))
            throw InvariantBreachError("align_first_class: step trace does not replay");
        res.trace.insert(res.trace.end(), step.trace.begin(), step.trace.end());
        res.coloring = std::move(step.coloring);
    }
    return res;
}

KempeTrace transform(const Graph& g, const EdgeColoring& beta1,
                     const EdgeColoring& beta2, const EdgeColoring* gamma) {
    const int delta = max_degree(g);
    check_palette(g, beta1, delta + 1, "transform(beta1)");
    check_palette(g, beta2, delta + 1, "transform(beta2)");
    check_class(g);

    KempeTrace full;
    if (delta <= 1) {
        // matchings: every edge is its own component for any color pair
        EdgeColoring cur = beta1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (cur.color[e] == beta2.color[e]) continue;
            TraceStep rec;
            cur = kempe_swap(g, cur, cur.color[e], beta2.color[e], g.edges[e].first, &rec);
            full.push_back(rec);
        }
        if (cur.color != beta2.color)
            throw InvariantBreachError("transform: base case failed to align");
        return full;
    }

    EdgeColoring gam;
    if (gamma) {
        check_palette(g, *gamma, delta, "transform(gamma)");
        gam = *gamma;
    } else {
        SolverResult sr = find_delta_coloring(g);
        if (!sr.class_one())
            throw PreconditionError("transform: graph is Class 2 (no Delta-coloring exists); "
                                    "use class2_transform");
        gam = *sr.coloring;
    }
    std::vector<int> target = color_class(gam, 1);

    AlignResult a1 = align_first_class(g, beta1, target);
    AlignResult a2 = align_first_class(g, beta2, target);

    // remove the aligned class; the remainder keeps colors 2..Delta+1,
    // relabel them down so color 1 is again the class being aligned
    std::vector<int> kept;
    Graph rest = drop_edges(g, target, &kept);
    auto restrict_shift = [&](const EdgeColoring& c) {
        EdgeColoring out;
        out.t = delta; // = (delta-1) + 1
        out.color.reserve(kept.size());
        for (int old : kept) out.color.push_back(c.color[old] - 1);
        return out;
    };
    KempeTrace inner = transform(rest, restrict_shift(a1.coloring), restrict_shift(a2.coloring));

    full = a1.trace;
    for (const TraceStep& s : inner)
        full.push_back({s.c + 1, s.d + 1, s.anchor});
    KempeTrace undo = reversed(a2.trace);
    full.insert(full.end(), undo.begin(), undo.end());

    if (!verify_trace(g, beta1, full, beta2))
        throw InvariantBreachError("transform: assembled trace does not replay to beta2");
    return full;
}

namespace {

// Copy a coloring of g onto both copies in H and color the bridge with the
// smallest color missing at the doubled vertex.
EdgeColoring extend_to_double(const DoublingMap& d, const Graph& g,
                              const EdgeColoring& c) {
    EdgeColoring out;
    out.t = c.t;
    out.color.assign(d.h.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        out.color[d.e1[e]] = c.color[e];
        out.color[d.e2[e]] = c.color[e];
    }
    auto miss = missing_colors(g, c, d.bridge_u);
    if (miss.empty())
        throw PreconditionError("extend_to_double: no color free at the doubled vertex");
    out.color[d.bridge] = miss.front();
    if (!validate_proper(d.h, out))
        throw InvariantBreachError("extend_to_double: extension not proper");
    return out;
}

} // namespace

KempeTrace class2_transform(const Graph& g, const EdgeColoring& beta1,
                            const EdgeColoring& beta2) {
    check_class(g);
    SolverResult sr = find_delta_coloring(g);
    if (sr.class_one()) return transform(g, beta1, beta2);

    const int delta = max_degree(g);
    // Class 2: chi' = Delta+1, inputs use palette chi'+1 = Delta+2
    check_palette(g, beta1, delta + 2, "class2_transform(beta1)");
    check_palette(g, beta2, delta + 2, "class2_transform(beta2)");

    int u = -1;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == delta) { u = v; break; }
    DoublingMap d = double_graph(g, u);

    EdgeColoring hb1 = extend_to_double(d, g, beta1);
    EdgeColoring hb2 = extend_to_double(d, g, beta2);

    // gamma_H: extend a (Delta+1)-coloring of g the same way; the bridge
    // picks up the unique color missing at u, so H is Class 1
    auto alpha = exact_coloring(g, delta + 1);
    if (!alpha)
        throw InvariantBreachError("class2_transform: no (Delta+1)-coloring found");
    EdgeColoring gamma_h = extend_to_double(d, g, *alpha);

    KempeTrace trace_h = transform(d.h, hb1, hb2, &gamma_h);
    KempeTrace trace_g = project_trace(d, g, beta1, hb1, trace_h);
    if (!verify_trace(g, beta1, trace_g, beta2))
        throw InvariantBreachError("class2_transform: projected trace does not replay");
    return trace_g;
}

KempeTrace project_trace(const DoublingMap& d, const Graph& g,
                         const EdgeColoring& g_start, const EdgeColoring& h_start,
                         const KempeTrace& trace_h) {
    std::vector<int> back(d.h.edge_count(), -1); // H-edge -> g-edge for copy 1
    for (int e = 0; e < g.edge_count(); ++e) back[d.e1[e]] = e;

    EdgeColoring cur_h = h_start;
    EdgeColoring cur_g = g_start;
    KempeTrace out;
    for (size_t i = 0; i < trace_h.size(); ++i) {
        const TraceStep& s = trace_h[i];
        ChainComponent comp = kempe_component(d.h, cur_h, s.c, s.d, s.anchor);
        int hit = -1;
        for (int e : comp.edges)
            if (back[e] >= 0) { hit = back[e]; break; }
        cur_h = kempe_swap(d.h, cur_h, s.c, s.d, s.anchor);
        if (hit >= 0) {
            // the single cut edge u1u2 means the component meets copy 1 in
            // exactly one maximal component of g's current coloring
            TraceStep rec;
            cur_g = kempe_swap(g, cur_g, s.c, s.d, g.edges[hit].first, &rec);
            out.push_back(rec);
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (cur_g.color[e] != cur_h.color[d.e1[e]])
                throw InvariantBreachError(
                    "project_trace: projected state diverged from H at step " +
                    std::to_string(i));
        }
    }
    return out;
}

} // namespace kempe
