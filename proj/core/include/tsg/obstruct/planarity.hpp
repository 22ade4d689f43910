#pragma once

#include "tsg/graph/graph.hpp"

namespace tsg::obstruct {

/// Kuratowski test by exhaustive search: after pruning vertices of degree at
/// most one and smoothing degree-two vertices, a graph is nonplanar iff it is
/// K5, K3,3, fails the Euler bound, or stays nonplanar after deleting some edge.
/// Results for intermediate graphs are memoized by canonical form.
[[nodiscard]] bool is_planar(const graph::Graph& g);

}  // namespace tsg::obstruct
