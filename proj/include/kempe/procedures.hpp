#pragma once

#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/fan.hpp"
#include "kempe/graph.hpp"

namespace kempe {

enum class ReductionEffect { ugly_decreased, bad_decreased, shift_realized };

struct Counts {
    int bad = 0, ugly = 0;

    bool operator==(const Counts&) const = default;
    // descent order: fewer bad first, fewer ugly as tiebreak
    bool lex_less(const Counts& o) const {
        return bad < o.bad || (bad == o.bad && ugly < o.ugly);
    }
};

// Result of one verified reduction step. The trace always replays from the
// input coloring to `coloring`; counts are filled when a target class was
// in scope.
struct ReductionOutcome {
    EdgeColoring coloring;
    MissingAssignment missing;
    KempeTrace trace;
    ReductionEffect effect = ReductionEffect::shift_realized;
    std::optional<Counts> before, after;
};

// Realizes the shift of a non-saturated cycle fan as Kempe changes
// (swap a component at the last leaf, run the path-fan shift, swap the
// grown component back). Output coloring equals shift_target exactly.
ReductionOutcome unsaturated_cycle_shift(const Graph& g, const EdgeColoring& c,
                                         const Fan& fan);

// Realizes the shift of a saturated cycle fan X_u(.,v), given that
// X_v(.,u) is a cycle with q >= 2 and m(u) != m(v). Requires the leaf sets
// of the two fans to be disjoint, which holds on triangle-free and
// chordless graphs; a violation raises ClassViolationError.
ReductionOutcome saturated_cycle_shift(const Graph& g, const EdgeColoring& c,
                                       const Fan& fan_u, const Fan& fan_v);

// Removes the ugly edge uv from the color-1 class when the fan at `side`
// is not a cycle: shift a path fan directly, or break a comet at its
// reentry spoke first. The result's class 1 is the input's minus {uv}.
ReductionOutcome resolve_noncycle_ugly(const Graph& g, const EdgeColoring& c,
                                       const MissingAssignment& m,
                                       const std::vector<int>& target_class,
                                       int ugly_edge, int side);

// Chordless-graph escape for an ugly edge uv whose fan at `side` is a cycle
// but whose last leaf is adjacent to v: swap one component, then shift the
// truncated path fan. Only sound on chordless graphs.
ReductionOutcome resolve_chord_ugly(const Graph& g, const EdgeColoring& c,
                                    const MissingAssignment& m,
                                    const std::vector<int>& target_class,
                                    int ugly_edge, int side);

// A bad edge with no color-1 edge at either endpoint is its own
// (color,1)-component: one swap recolors it to 1.
ReductionOutcome recolor_isolated_bad(const Graph& g, const EdgeColoring& c,
                                      const std::vector<int>& target_class,
                                      int bad_edge);

} // namespace kempe
