#pragma once

#include "tsg/graph/canonical.hpp"
#include "tsg/graph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsg::graph {

struct FamilyMember {
    Graph graph;
    /// Name from the (vertex count, degree sequence) table; empty if the
    /// invariants match no Petersen-family member.
    std::string canonical_name;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::size_t> degree_sequence;
    CanonicalForm form;
    /// Moves from the seed, in order (e.g. "delta-y{1,2,3}").
    std::vector<std::string> provenance;
};

struct FamilyPolicy {
    std::size_t max_vertices = 12;
    std::size_t max_members = 64;
};

/// Petersen-family name for the invariants, if any:
/// K6 [5^6], K331 [6,4^6], P7 [5^3,4^3,3], K44minus [4^6,3^2], P8 [5,4^4,3^3],
/// P9 [4^3,3^6], P10 [3^10].
[[nodiscard]] std::optional<std::string> family_name(std::size_t vertex_count,
                                                     const std::vector<std::size_t>& degree_sequence);

/// Breadth-first closure under delta-Y and Y-delta at every site, deduplicated
/// by canonical form and sorted by (vertex count, canonical form). Members keep
/// the first graph reached. Throws LimitError when a member exceeds the vertex
/// cap or the closure exceeds the member cap.
[[nodiscard]] std::vector<FamilyMember> family_closure(const Graph& seed, const FamilyPolicy& policy = {});

}  // namespace tsg::graph
