#pragma once

#include <array>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

// Total assignment of colors 1..t to edge indices. Proper by invariant;
// operations return fresh values instead of mutating.
struct EdgeColoring {
    int t = 0;
    std::vector<int> color; // per edge index

    bool operator==(const EdgeColoring&) const = default;
};

struct Violation {
    int e1, e2; // offending edge pair
    int vertex; // shared endpoint
};

// True iff no two edges sharing a vertex have equal color. Throws on
// palette/edge-count mismatch. Violating pairs collected when asked.
bool validate_proper(const Graph& g, const EdgeColoring& c,
                     std::vector<Violation>* violations = nullptr);

// {1..t} minus the colors incident to v, ascending.
std::vector<int> missing_colors(const Graph& g, const EdgeColoring& c, int v);

enum class MissingPolicy { plain, one_last };

// One chosen missing color per vertex. Under one_last, chosen(v) == 1 iff
// 1 is the only color missing at v; a vertex with chosen value 1 is "free".
struct MissingAssignment {
    MissingPolicy policy = MissingPolicy::plain;
    std::vector<int> at; // per vertex
};

// Smallest admissible color per the policy. Throws if some vertex has
// deg(v) == t (no missing color).
MissingAssignment choose_missing(const Graph& g, const EdgeColoring& c,
                                 MissingPolicy policy);

// Every value of m is genuinely missing at its vertex (and the one_last
// condition holds when that policy is set).
bool missing_valid(const Graph& g, const EdgeColoring& c, const MissingAssignment& m);

enum class ChainShape { path, even_cycle };

// One connected component of the subgraph induced by the edges colored c or
// d. Properness forces a path or an even cycle.
struct ChainComponent {
    int c = 0, d = 0;
    std::vector<int> edges;
    std::vector<int> vertices;
    ChainShape shape = ChainShape::path;
    std::array<int, 2> endpoints{-1, -1}; // when path

    bool contains_vertex(int v) const;
};

// The unique component containing `anchor`. Throws if anchor touches
// neither color.
ChainComponent kempe_component(const Graph& g, const EdgeColoring& c,
                               int color_c, int color_d, int anchor);

// One replayable Kempe change: swap colors c and d on the component
// containing `anchor`. Anchors are vertices: a vertex lies in at most one
// (c,d)-component, and the vertex set survives the swap, which is what
// makes traces reversible.
struct TraceStep {
    int c = 0, d = 0;
    int anchor = -1;

    bool operator==(const TraceStep&) const = default;
};

using KempeTrace = std::vector<TraceStep>;

EdgeColoring kempe_swap(const Graph& g, const EdgeColoring& c,
                        int color_c, int color_d, int anchor,
                        TraceStep* record = nullptr);

// Sequential replay. Throws TraceError with the failing step index if some
// anchor is invalid mid-replay.
EdgeColoring apply_trace(const Graph& g, const EdgeColoring& start,
                         const KempeTrace& trace);

// Replay succeeds and the final coloring equals `target` edge-by-edge.
bool verify_trace(const Graph& g, const EdgeColoring& start,
                  const KempeTrace& trace, const EdgeColoring& target);

KempeTrace reversed(const KempeTrace& trace);

// Status of an edge relative to a target color class (a matching):
// good = in the class and colored 1, bad = in the class but not colored 1,
// ugly = colored 1 but not in the class.
enum class EdgeStatus { good, bad, ugly, neutral };

struct EdgeClassification {
    std::vector<EdgeStatus> status;
    int good = 0, bad = 0, ugly = 0;
};

// Throws if target_class is not a matching.
EdgeClassification classify_edges(const Graph& g, const EdgeColoring& c,
                                  const std::vector<int>& target_class);

// Edge indices colored j, ascending.
std::vector<int> color_class(const EdgeColoring& c, int j);

// The edge at v colored `color`, or -1. At most one exists when proper.
int edge_colored(const Graph& g, const EdgeColoring& c, int v, int color);

bool color_missing_at(const Graph& g, const EdgeColoring& c, int v, int color);

} // namespace kempe
