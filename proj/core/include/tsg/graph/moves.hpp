#pragma once

#include "tsg/graph/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace tsg::graph {

enum class MoveKind { TriangleToY, YToTriangle };

/// A triangle (TriangleToY) or the neighborhood of a degree-3 vertex `center`
/// (YToTriangle). Site labels are kept in natural order.
struct MoveSite {
    MoveKind kind = MoveKind::TriangleToY;
    std::array<std::string, 3> site;
    std::string center;

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Smallest positive integer not already used as a label.
[[nodiscard]] std::string fresh_label(const Graph& g);

/// Removes the triangle's edges and joins a fresh vertex to its corners.
/// Throws InputError if the site is not a triangle of `g`.
[[nodiscard]] Graph delta_y(const Graph& g, const MoveSite& site);

/// Removes the degree-3 center and joins its neighbors pairwise. Throws
/// InputError if the site is invalid or two neighbors are already adjacent.
[[nodiscard]] Graph y_delta(const Graph& g, const MoveSite& site);

/// Every triangle and every Y site whose neighbors are pairwise non-adjacent,
/// triangles first, each group sorted.
[[nodiscard]] std::vector<MoveSite> move_sites(const Graph& g);

[[nodiscard]] std::string describe(const MoveSite& site);

}  // namespace tsg::graph
