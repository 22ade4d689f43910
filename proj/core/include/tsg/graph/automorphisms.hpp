#pragma once

#include "tsg/graph/graph.hpp"
#include "tsg/perm/perm_group.hpp"

#include <span>
#include <string>
#include <vector>

namespace tsg::graph {

struct AutomorphismPolicy {
    std::size_t max_vertices = 12;
};

/// Every automorphism, sorted. Backtracking assigns vertices in order and only
/// tries images in the same cell of the refined degree partition.
/// Throws LimitError above the policy's vertex count.
[[nodiscard]] std::vector<Permutation> all_automorphisms(const Graph& g, const AutomorphismPolicy& policy = {});

/// The automorphism group with a small generating set.
[[nodiscard]] perm::PermGroup automorphism_group(const Graph& g, const AutomorphismPolicy& policy = {});

/// Restricts `alpha` to `core`, giving a permutation on the core's own domain.
/// Throws InputError if `alpha` is not an automorphism of `g` or moves the core.
[[nodiscard]] Permutation restrict_automorphism(const Permutation& alpha, const Graph& g,
                                                std::span<const std::string> core);

}  // namespace tsg::graph
