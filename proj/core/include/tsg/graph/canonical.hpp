#pragma once

#include "tsg/graph/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsg::graph {

/// Adjacency rows of a graph after canonical relabeling; equal forms mean
/// isomorphic graphs.
struct CanonicalForm {
    std::vector<std::uint64_t> rows;

    [[nodiscard]] std::size_t vertex_count() const noexcept { return rows.size(); }
    /// Hex dump of the rows, for reports.
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    /// order[i] is the vertex placed at canonical position i.
    std::vector<Point> order;
    CanonicalForm form;
    /// Search leaves reaching the minimal form; equals |Aut(g)|.
    std::size_t leaf_automorphisms = 0;
};

/// Equitable refinement of `colors` (colors are ranks; equal rank = same cell).
/// Cell numbering depends only on the structure, never on labels.
[[nodiscard]] std::vector<std::uint32_t> refine_colors(const Graph& g, std::vector<std::uint32_t> colors);

/// Degree coloring refined to an equitable partition.
[[nodiscard]] std::vector<std::uint32_t> refined_degree_colors(const Graph& g);

/// Individualization-refinement over the first non-singleton cell, keeping the
/// lexicographically least adjacency-row form.
[[nodiscard]] CanonicalLabeling canonical_labeling(const Graph& g);
[[nodiscard]] CanonicalForm canonical_form(const Graph& g);

/// Witness map: witness[p] is the vertex of `h` matched to vertex p of `g`.
/// The witness is checked edge by edge before it is returned.
[[nodiscard]] std::optional<std::vector<Point>> graph_isomorphism(const Graph& g, const Graph& h);
[[nodiscard]] bool graphs_isomorphic(const Graph& g, const Graph& h);

}  // namespace tsg::graph
