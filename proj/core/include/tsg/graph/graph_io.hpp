#pragma once

#include "tsg/graph/graph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace tsg::graph {

/// `{"vertices": ["1", ...], "edges": [["1","2"], ...]}`. Throws InputError on
/// schema violations and everything Graph::make rejects.
[[nodiscard]] Graph graph_from_json(const nlohmann::json& doc);
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] Graph load_graph_file(const std::string& path);

/// Vertices and edges sorted; each edge pair in natural label order.
[[nodiscard]] nlohmann::ordered_json graph_to_json(const Graph& g);

}  // namespace tsg::graph
