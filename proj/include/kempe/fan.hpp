#pragma once

#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

enum class FanKind { path, cycle, comet };

// The unique maximal chained spoke sequence (ux0, ux1, ..., uxp) at a
// center u: m(x_i) equals the color of the next spoke, and the final leaf's
// missing color either is missing at u (path), re-enters at spoke 0 (cycle)
// or at an interior spoke (comet). Classification is relative to the
// MissingAssignment snapshot the fan was built from, not intrinsic to the
// coloring: degree-deficient leaves miss several colors and the lemmas
// quantify over one fixed choice.
struct Fan {
    int center = -1;
    std::vector<int> spokes; // edge indices, all incident to center
    std::vector<int> leaves; // x_0 .. x_p
    FanKind kind = FanKind::path;
    int reentry = -1; // q with m(x_p) == color(ux_q), only for comets
    MissingAssignment missing;

    int p() const { return static_cast<int>(spokes.size()) - 1; }
};

// The fan with ux_0 = uv. Throws if uv is not an edge or m is invalid.
Fan build_fan(const Graph& g, const EdgeColoring& c, const MissingAssignment& m,
              int u, int v);

// Arcs (uw -> ux) between incident-edge indices of u, present exactly when
// m(w) == color(ux). Out-degree is at most one per node.
std::vector<std::pair<int, int>> fan_digraph(const Graph& g, const EdgeColoring& c,
                                             const MissingAssignment& m, int u);

struct ShiftResult {
    EdgeColoring coloring;
    MissingAssignment missing;
    KempeTrace trace;
};

// Lemma-style realization of the shift for a path fan: p+1 Kempe swaps in
// the order ux_p, ..., ux_0, each on a component of exactly one edge.
ShiftResult shift_path_fan(const Graph& g, const EdgeColoring& c, const Fan& fan);

// The pure shift coloring and missing-color updates for a path or cycle fan
// (no trace). This is the oracle the trace-producing procedures must reach.
std::pair<EdgeColoring, MissingAssignment>
shift_target(const Graph& g, const EdgeColoring& c, const Fan& fan);

// A cycle fan is saturated when for every index i, the component of
// K(color(ux_i), m(u)) containing u also contains the previous leaf.
bool is_saturated(const Graph& g, const EdgeColoring& c, const Fan& fan);

} // namespace kempe
