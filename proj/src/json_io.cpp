#include "kempe/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kempe/errors.hpp"

namespace kempe {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw PreconditionError(std::string(what) + ": malformed JSON");
    return j;
}

} // namespace

Graph graph_from_json(const std::string& text) {
    json j = parse(text, "graph");
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw PreconditionError("graph: expected {\"n\": ..., \"edges\": [...]}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw PreconditionError("graph: each edge must be a [u, v] pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(j.at("n").get<int>(), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    json j{{"n", g.n}, {"edges", edges}};
    return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
    json j = parse(text, "coloring");
    if (!j.is_object() || !j.contains("t") || !j.contains("colors"))
        throw PreconditionError("coloring: expected {\"t\": ..., \"colors\": [...]}");
    EdgeColoring c;
    c.t = j.at("t").get<int>();
    for (const auto& x : j.at("colors")) c.color.push_back(x.get<int>());
    return c;
}

std::string coloring_to_json(const EdgeColoring& c) {
    json j{{"t", c.t}, {"colors", c.color}};
    return j.dump();
}

KempeTrace trace_from_json(const std::string& text) {
    json j = parse(text, "trace");
    if (!j.is_object() || !j.contains("steps"))
        throw PreconditionError("trace: expected {\"steps\": [...]}");
    KempeTrace t;
    for (const auto& s : j.at("steps")) {
        if (!s.contains("c") || !s.contains("d") || !s.contains("anchor"))
            throw PreconditionError("trace: each step needs c, d, anchor");
        t.push_back({s.at("c").get<int>(), s.at("d").get<int>(), s.at("anchor").get<int>()});
    }
    return t;
}

std::string trace_to_json(const KempeTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t)
        steps.push_back({{"c", s.c}, {"d", s.d}, {"anchor", s.anchor}});
    json j{{"steps", steps}};
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

} // namespace kempe
