#pragma once

#include <string>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Wire formats:
//   graph    {"n": <int>, "edges": [[u, v], ...]}       (edge index = position)
//   coloring {"t": <int>, "colors": [<c per edge>]}
//   trace    {"steps": [{"c": <int>, "d": <int>, "anchor": <vertex>}, ...]}

Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

EdgeColoring coloring_from_json(const std::string& text);
std::string coloring_to_json(const EdgeColoring& c);

KempeTrace trace_from_json(const std::string& text);
std::string trace_to_json(const KempeTrace& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace kempe
