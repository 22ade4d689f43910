#pragma once

#include "tsg/graph/graph.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace tsg::obstruct {

using graph::Edge;
using graph::Graph;
using graph::Permutation;
using graph::Point;

/// Fixed vertices V_f, edges with both endpoints fixed E_f, and edges whose
/// endpoints are swapped E_i. A finite-order map realizing the automorphism is
/// the identity on each edge of E_f and fixes exactly the midpoint of each edge
/// of E_i, so these three sets describe its fixed set inside the graph.
struct FixedStructure {
    std::vector<Point> fixed_vertices;
    std::vector<Edge> fixed_edges;
    std::vector<Edge> inverted_edges;

    [[nodiscard]] bool empty() const noexcept { return fixed_vertices.empty() && inverted_edges.empty(); }
};

/// Throws InputError if `alpha` is not an automorphism of `g`.
[[nodiscard]] FixedStructure fixed_structure(const Permutation& alpha, const Graph& g);

/// The fixed graph (V_f, E_f) as a graph on the fixed labels.
[[nodiscard]] Graph fixed_graph(const FixedStructure& f, const Graph& g);

[[nodiscard]] nlohmann::ordered_json to_json(const FixedStructure& f, const Graph& g);

}  // namespace tsg::obstruct
