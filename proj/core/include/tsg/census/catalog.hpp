#pragma once

#include "tsg/perm/iso_class.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tsg::census {

using perm::IsoClassName;

/// Asserted realizable groups for one graph. `positive` lists groups realized
/// by orientation-preserving symmetries; `realizable_only` those realizable
/// only with orientation-reversing ones. Neither list contains the trivial group.
struct CatalogEntry {
    std::string graph;
    std::vector<IsoClassName> positive;
    std::vector<IsoClassName> realizable_only;
    std::string cite;
};

using Catalog = std::vector<CatalogEntry>;

/// The built-in catalog document (JSON array of entries).
[[nodiscard]] std::string_view default_catalog_json();
[[nodiscard]] const Catalog& default_catalog();

/// Parses and validates a catalog document:
///
///     [{"graph": name, "positive": [names], "realizable_only": [names], "cite": string}, ...]
///
/// Graph names accept built-in aliases and are stored canonically. Throws
/// InputError on schema violations, unknown graph or group names, duplicate
/// graph entries, overlapping lists, and empty documents ("no entries").
[[nodiscard]] Catalog parse_catalog(std::string_view text);
[[nodiscard]] Catalog load_catalog_file(const std::string& path);

/// nullptr when the catalog has no entry for `graph`.
[[nodiscard]] const CatalogEntry* find_entry(const Catalog& catalog, std::string_view graph);

}  // namespace tsg::census
