#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/typed_graph.hpp"

#include <json.hpp>

#include <memory>
#include <string_view>

namespace ramsey {

using json = nlohmann::json;

/// {"n": int, "edges": [[u,v],...]} with edges in EdgeId order.
json to_json(const Graph& g);
/// Adds "types" (aligned with "edges") and "pattern" (graph6).
json to_json(const TypedGraph& g);

/// Accepts edges in any order; throws ParseError on schema violations and
/// DomainError on invalid graphs. Any "types"/"pattern" keys are ignored.
Graph graph_from_json(const json& j);

/// "types" must align with the listed "edges". The pattern comes from the
/// "pattern" key unless `pattern` is supplied; when both are present they
/// must agree.
TypedGraph typed_graph_from_json(const json& j, std::shared_ptr<const Graph> pattern = nullptr);

/// A graph given on the command line: graph6 text, or "@path" naming a JSON
/// edge-list file.
Graph read_graph_argument(std::string_view arg);
TypedGraph read_typed_graph_argument(std::string_view arg, std::shared_ptr<const Graph> pattern = nullptr);

json read_json_file(const std::string& path);

} // namespace ramsey
