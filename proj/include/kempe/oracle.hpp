#pragma once

#include <cstdint>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

constexpr long long kDefaultOracleCap = 5'000'000;

// All proper t-colorings of g plus the partition of that space under
// single Kempe swaps. Ground truth the engine is checked against; the only
// shared code path is kempe_swap itself.
struct ColoringSpace {
    int t = 0;
    std::vector<std::vector<int>> colorings; // lexicographic by color vector
    std::vector<int> component;              // class label per coloring
    int class_count = 0;

    std::vector<int> class_sizes() const;
};

// Backtracking enumeration in lexicographic order. Throws CapExceededError
// when t^|E| exceeds the cap.
std::vector<std::vector<int>> enumerate_colorings(const Graph& g, int t,
                                                  long long cap = kDefaultOracleCap);

// Connected components under all single Kempe swaps (all color pairs, all
// anchors).
ColoringSpace equivalence_classes(const Graph& g, int t,
                                  long long cap = kDefaultOracleCap);

struct OracleAnswer {
    bool equivalent = false;
    KempeTrace shortest; // BFS-shortest witness when equivalent
};

OracleAnswer oracle_equivalent(const Graph& g, int t, const EdgeColoring& a,
                               const EdgeColoring& b,
                               long long cap = kDefaultOracleCap);

} // namespace kempe
