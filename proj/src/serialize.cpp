#include "ramsey/serialize.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"

#include <fstream>

namespace ramsey {

json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

json to_json(const TypedGraph& g) {
    json j = to_json(g.graph());
    j["types"] = g.types();
    j["pattern"] = to_graph6(g.pattern());
    return j;
}

namespace {

struct RawGraph {
    int n = 0;
    std::vector<Edge> edges;
};

RawGraph raw_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("graph JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "n" && key != "edges" && key != "types" && key != "pattern")
            throw ParseError("unknown key '" + key + "' in graph JSON");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("graph JSON needs an integer \"n\"");
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph JSON needs an \"edges\" array");
    RawGraph raw;
    raw.n = j["n"].get<int>();
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        raw.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return raw;
}

} // namespace

Graph graph_from_json(const json& j) {
    RawGraph raw = raw_from_json(j);
    return Graph(raw.n, raw.edges);
}

TypedGraph typed_graph_from_json(const json& j, std::shared_ptr<const Graph> pattern) {
    RawGraph raw = raw_from_json(j);
    if (j.contains("pattern")) {
        if (!j["pattern"].is_string()) throw ParseError("\"pattern\" must be a graph6 string");
        auto declared = std::make_shared<const Graph>(parse_graph6(j["pattern"].get<std::string>()));
        if (pattern && !(*pattern == *declared)) throw DomainError("typed graph JSON declares a different pattern");
        if (!pattern) pattern = std::move(declared);
    }
    if (!pattern) throw ParseError("typed graph JSON needs a \"pattern\"");
    if (!j.contains("types") || !j["types"].is_array()) throw ParseError("typed graph JSON needs a \"types\" array");
    const json& jt = j["types"];
    if (jt.size() != raw.edges.size()) throw ParseError("\"types\" must have one entry per edge");

    Graph g(raw.n, raw.edges);
    std::vector<EdgeId> types(g.size());
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        if (!jt[i].is_number_integer() || jt[i].get<long long>() < 0) throw ParseError("types must be non-negative integers");
        types[g.id_of(raw.edges[i].u, raw.edges[i].v)] = jt[i].get<EdgeId>();
    }
    return TypedGraph(std::move(g), std::move(pattern), std::move(types));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

Graph read_graph_argument(std::string_view arg) {
    if (arg.starts_with("@")) return graph_from_json(read_json_file(std::string(arg.substr(1))));
    return parse_graph6(arg);
}

TypedGraph read_typed_graph_argument(std::string_view arg, std::shared_ptr<const Graph> pattern) {
    if (!arg.starts_with("@")) throw ParseError("typed graphs are read from JSON files (@path)");
    return typed_graph_from_json(read_json_file(std::string(arg.substr(1))), std::move(pattern));
}

} // namespace ramsey
