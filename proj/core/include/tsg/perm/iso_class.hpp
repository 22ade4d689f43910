#pragma once

#include "tsg/perm/perm_group.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsg::perm {

/// Isomorphism invariants used to shortlist catalog candidates.
struct GroupFingerprint {
    std::size_t order = 0;
    std::map<std::size_t, std::size_t> element_orders;  // element order -> count
    bool is_abelian = true;
    std::size_t center_order = 0;
    std::size_t derived_subgroup_order = 0;

    friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

[[nodiscard]] GroupFingerprint fingerprint(const PermGroup& group);

/// Name of an abstract group from the closed catalog, or "unknown(order=N)".
///
/// "Z2xZ2" is accepted as an alias and normalized to "D2".
class IsoClassName {
public:
    /// Throws InputError for names outside the catalog.
    static IsoClassName parse(std::string_view name);
    static IsoClassName unknown(std::size_t order);

    [[nodiscard]] const std::string& str() const noexcept { return name_; }
    [[nodiscard]] bool is_unknown() const noexcept { return unknown_; }
    /// Order of the named group (from the reference, or the recorded order).
    [[nodiscard]] std::size_t group_order() const noexcept { return order_; }

    friend bool operator==(const IsoClassName& a, const IsoClassName& b) { return a.name_ == b.name_; }
    /// Ascending by group order, then by name.
    friend std::strong_ordering operator<=>(const IsoClassName& a, const IsoClassName& b);

private:
    IsoClassName(std::string name, std::size_t order, bool unknown)
        : name_(std::move(name)), order_(order), unknown_(unknown)
    {
    }

    std::string name_;
    std::size_t order_ = 0;
    bool unknown_ = false;
};

/// A catalog entry with a concrete reference group.
struct CatalogGroup {
    std::string name;
    PermGroup reference;
    GroupFingerprint fingerprint;
};

/// Every catalog name with its reference permutation group, in a fixed order.
[[nodiscard]] const std::vector<CatalogGroup>& iso_catalog();
[[nodiscard]] const CatalogGroup& catalog_group(std::string_view name);

/// Matches the fingerprint against the catalog and confirms every candidate by
/// explicit isomorphism search. Never throws on unmatched input: the fallback
/// name "unknown(order=N)" is returned instead.
[[nodiscard]] IsoClassName identify_group(const PermGroup& group);

/// An isomorphism given by generator images, with the full element map.
struct Isomorphism {
    std::vector<Permutation> source_generators;
    std::vector<Permutation> target_images;
    /// element_map[i] = index in the target of the image of source element i.
    std::vector<std::size_t> element_map;
};

/// Generator-image backtracking with order/centralizer pruning and
/// generated-subgroup order checks. Throws LimitError above kTableCap.
[[nodiscard]] std::optional<Isomorphism> find_isomorphism(const PermGroup& source, const PermGroup& target);
[[nodiscard]] bool is_isomorphic(const PermGroup& a, const PermGroup& b);

/// Injective homomorphism from `source` into `target`, by the same search
/// without the centralizer pruning. Throws LimitError above kTableCap.
[[nodiscard]] std::optional<Isomorphism> find_embedding(const PermGroup& source, const PermGroup& target);

}  // namespace tsg::perm
