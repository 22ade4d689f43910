#pragma once

#include "tsg/perm/group_table.hpp"
#include "tsg/perm/iso_class.hpp"
#include "tsg/perm/perm_group.hpp"

#include <cstddef>
#include <vector>

namespace tsg::perm {

/// A subgroup of a parent group, as parent element indices plus a small
/// generating set.
struct Subgroup {
    ElementSet members;
    std::vector<Permutation> generators;

    [[nodiscard]] std::size_t order() const { return members.count(); }
    [[nodiscard]] PermGroup as_group(const DomainPtr& domain) const { return PermGroup(domain, generators); }
};

struct SubgroupClass {
    /// Conjugate subgroups, sorted; the first one is the representative.
    std::vector<Subgroup> members;
    IsoClassName iso;

    [[nodiscard]] const Subgroup& representative() const { return members.front(); }
    [[nodiscard]] std::size_t order() const { return members.front().order(); }
};

struct SubgroupLattice {
    /// Sorted by subgroup order, then by representative.
    std::vector<SubgroupClass> classes;

    [[nodiscard]] std::size_t subgroup_count() const;
    /// Distinct iso names, ordered by IsoClassName ordering.
    [[nodiscard]] std::vector<IsoClassName> iso_names() const;
};

struct SubgroupPolicy {
    std::size_t max_group_order = 72;
};

/// All subgroups, grouped into conjugacy classes and tagged by isomorphism class.
///
/// Bottom-up join closure: every subgroup is a join of cyclic subgroups, so the
/// search seeds with all cyclic subgroups and joins each discovered subgroup with
/// each cyclic subgroup it does not contain, until nothing new appears.
/// Throws LimitError when the parent order exceeds the policy cap.
[[nodiscard]] SubgroupLattice enumerate_subgroups(const PermGroup& group, const SubgroupPolicy& policy = {});

/// All subgroups of index exactly 2, sorted by member list. Each one contains the
/// subgroup generated by squares; they correspond to the nonzero functionals on
/// the elementary abelian quotient by that subgroup.
[[nodiscard]] std::vector<Subgroup> index_two_subgroups(const PermGroup& group);

}  // namespace tsg::perm
