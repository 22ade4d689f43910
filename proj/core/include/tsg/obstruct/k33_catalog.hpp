#pragma once

#include "tsg/graph/graph.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/perm_group.hpp"

#include <string>
#include <vector>

namespace tsg::obstruct {

/// Realizable element classes of Aut(K3,3) (Nikkuni and Taniyama), as
/// representatives on the K33 built-in labels.
struct ElementClassCatalogK33 {
    std::vector<graph::Permutation> positive_classes;
    std::vector<graph::Permutation> negative_classes;
};

enum class ElementClass { Identity, Positive, Negative };

[[nodiscard]] const graph::Graph& k33_graph();
[[nodiscard]] const perm::PermGroup& k33_automorphisms();
[[nodiscard]] const ElementClassCatalogK33& k33_element_catalog();

/// Class of an element of Aut(K3,3) given on the K33 built-in domain. Throws
/// InputError for permutations outside Aut(K3,3).
[[nodiscard]] ElementClass classify_k33_element(const graph::Permutation& beta);

/// The catalog representative conjugate to `beta` ("id" for the identity).
[[nodiscard]] const graph::Permutation& k33_class_representative(const graph::Permutation& beta);

/// Nontrivial groups positively realizable for K3,3 (Flapan and Lawrence).
[[nodiscard]] const std::vector<std::string>& k33_positive_group_catalog();

/// Iso classes of all subgroups of groups in k33_positive_group_catalog(),
/// including the trivial group; computed from the reference groups.
[[nodiscard]] const std::vector<perm::IsoClassName>& k33_positive_subgroup_closure();

}  // namespace tsg::obstruct
