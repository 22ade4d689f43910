#pragma once

#include "tsg/perm/permutation.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tsg::perm {

class GroupTable;

/// Default element cap: |S6| * 14.
inline constexpr std::size_t kDefaultElementCap = 10'080;
/// Groups up to this order get a full Cayley table on demand.
inline constexpr std::size_t kTableCap = 1'440;

/// A permutation group given by generators over a fixed domain.
///
/// The element set is materialized on first use and shared between copies;
/// after construction a PermGroup is an immutable value that is safe to share
/// across threads. Elements are kept sorted lexicographically by image sequence,
/// so index 0 is always the identity.
class PermGroup {
public:
    /// Throws InputError if a generator lives on a different domain.
    PermGroup(DomainPtr domain, std::vector<Permutation> generators,
              std::size_t element_cap = kDefaultElementCap);

    static PermGroup trivial(DomainPtr domain) { return PermGroup(std::move(domain), {}); }

    [[nodiscard]] const DomainPtr& domain() const noexcept { return domain_; }
    [[nodiscard]] std::span<const Permutation> generators() const noexcept { return generators_; }
    [[nodiscard]] std::size_t element_cap() const noexcept { return element_cap_; }

    /// Throws LimitError when the closure grows past the element cap.
    [[nodiscard]] std::span<const Permutation> elements() const;
    [[nodiscard]] std::size_t order() const { return elements().size(); }
    [[nodiscard]] bool contains(const Permutation& p) const { return index_of(p).has_value(); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Permutation& p) const;
    [[nodiscard]] const Permutation& element(std::size_t index) const { return elements()[index]; }

    /// Cayley table; throws LimitError above kTableCap.
    [[nodiscard]] const GroupTable& table() const;

    /// Same element set (generators may differ).
    [[nodiscard]] bool same_elements(const PermGroup& other) const;

private:
    struct Cache;

    DomainPtr domain_;
    std::vector<Permutation> generators_;
    std::size_t element_cap_;
    std::shared_ptr<Cache> cache_;
};

/// One conjugacy class: its lexicographically least element and size.
struct ConjugacyClass {
    Permutation representative;
    std::size_t size;
};

/// Classes sorted by representative. Throws LimitError past the element cap.
[[nodiscard]] std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group);

/// The subgroup generated by `generators` inside `group`'s domain.
[[nodiscard]] PermGroup subgroup(const PermGroup& group, std::vector<Permutation> generators);

/// Greedy small generating set drawn from `elements`: repeatedly adds the
/// highest-order element not yet generated.
[[nodiscard]] std::vector<Permutation> small_generating_set(const DomainPtr& domain,
                                                            std::span<const Permutation> elements);

}  // namespace tsg::perm
