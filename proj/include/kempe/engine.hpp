#pragma once

#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/factory.hpp"
#include "kempe/graph.hpp"
#include "kempe/procedures.hpp"

namespace kempe {

// Exact backtracking edge colorer: edges by index, colors ascending.
// nullopt when no proper t-coloring exists (proven by exhaustion). A
// nonnegative max_nodes bounds the number of assignment attempts; exceeding
// it throws CapExceededError.
std::optional<EdgeColoring> exact_coloring(const Graph& g, int t,
                                           long long max_nodes = -1);

// Either a Delta-coloring or a certificate that palette Delta is infeasible.
struct SolverResult {
    std::optional<EdgeColoring> coloring;
    int palette = 0;

    bool class_one() const { return coloring.has_value(); }
};

SolverResult find_delta_coloring(const Graph& g);

struct AlignResult {
    EdgeColoring coloring;
    KempeTrace trace;
    std::vector<Counts> descent_log; // (bad, ugly) after each state, strictly lex-decreasing
};

// Descent driver: transforms beta into a coloring whose color-1 class is
// exactly `target` (a color class of some Delta-coloring), by repeatedly
// applying whichever reduction applies:
//   (a) recolor an isolated bad edge,
//   (b) resolve an ugly edge whose fan on either side is not a cycle,
//   (c) on chordless graphs, the chord escape when the last fan leaf is
//       adjacent to the near endpoint,
//   (d) the main step: shift the cycle fan of an ugly edge next to a bad
//       edge with a free endpoint, then recolor that bad edge with 1.
// Each iteration strictly decreases (bad, ugly) lexicographically.
AlignResult align_first_class(const Graph& g, const EdgeColoring& beta,
                              const std::vector<int>& target);

// All (Delta+1)-colorings of a Class 1 triangle-free or chordless graph are
// Kempe-equivalent; returns a verified trace from beta1 to beta2. `gamma`
// optionally supplies the Delta-coloring for the top level.
KempeTrace transform(const Graph& g, const EdgeColoring& beta1,
                     const EdgeColoring& beta2,
                     const EdgeColoring* gamma = nullptr);

// The Corollary 1.3 route: Class 1 graphs delegate to transform; Class 2
// graphs are doubled into a Class 1 graph H, transformed there with palette
// chi'+1 = Delta(H)+1, and the H-trace is projected back onto g.
KempeTrace class2_transform(const Graph& g, const EdgeColoring& beta1,
                            const EdgeColoring& beta2);

// Replays trace_h on H from h_start while projecting each step onto copy 1;
// emits one g-step per H-step whose component meets copy 1. The projected
// g-state is compared with the restriction of the H-state after every step
// and any divergence is a hard failure.
KempeTrace project_trace(const DoublingMap& d, const Graph& g,
                         const EdgeColoring& g_start, const EdgeColoring& h_start,
                         const KempeTrace& trace_h);

} // namespace kempe
