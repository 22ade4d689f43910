#pragma once

#include "tsg/census/catalog.hpp"
#include "tsg/graph/graph.hpp"
#include "tsg/obstruct/verdict.hpp"
#include "tsg/perm/perm_group.hpp"
#include "tsg/perm/subgroups.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsg::census {

struct AnalysisOptions {
    /// Lifts the subgroup cap to perm::kTableCap so that K6 and P10 run the
    /// whole pipeline instead of catalog passthrough.
    bool full_pipeline = false;
    perm::SubgroupPolicy policy{};
};

struct SubgroupClassReport {
    IsoClassName iso;
    std::size_t order = 0;
    std::size_t conjugates = 0;
    std::vector<perm::Permutation> generators;
    obstruct::Verdict tsg_plus;
    obstruct::Verdict tsg;
};

/// Computed candidate set against the catalog's expected set (trivial group included).
struct Comparison {
    /// "equal", "superset" (computed has extra classes) or "missing".
    std::string outcome;
    std::vector<IsoClassName> computed;
    std::vector<IsoClassName> expected;
    std::vector<IsoClassName> missing;
    std::vector<IsoClassName> extra;
};

/// Iso class with the distinct failure reasons of its conjugacy representatives.
using Exclusion = std::pair<IsoClassName, std::vector<std::string>>;

struct GraphReport {
    std::string graph;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t aut_order = 0;
    IsoClassName aut_iso = IsoClassName::unknown(0);
    std::vector<perm::ConjugacyClass> conjugacy_classes;

    /// Set when Aut is above the subgroup cap; the lists below are then empty.
    bool pipeline_skipped = false;
    std::vector<SubgroupClassReport> subgroup_classes;
    std::vector<IsoClassName> subgroup_isos;
    std::vector<IsoClassName> tsg_plus_candidates;
    std::vector<IsoClassName> tsg_candidates;
    std::vector<Exclusion> tsg_plus_exclusions;
    std::vector<Exclusion> tsg_exclusions;

    /// Present when the pipeline ran and the catalog has an entry for the graph.
    std::optional<Comparison> positive_comparison;
    std::optional<Comparison> total_comparison;
};

/// Aut, its subgroup classes, and per-class candidate verdicts. A class of
/// isomorphic subgroups is a candidate when any conjugacy representative passes.
/// Throws InputError for unknown built-in names.
[[nodiscard]] GraphReport analyze_graph(std::string_view name, const AnalysisOptions& options = {},
                                        const Catalog& catalog = default_catalog());
/// `name` selects the catalog entry used for comparisons (if any).
[[nodiscard]] GraphReport analyze_graph(const graph::Graph& g, std::string name, const AnalysisOptions& options = {},
                                        const Catalog& catalog = default_catalog());

[[nodiscard]] Comparison compare_sets(std::vector<IsoClassName> computed, std::vector<IsoClassName> expected);

/// Catalog positive list plus the trivial group, sorted.
[[nodiscard]] std::vector<IsoClassName> expected_positive(const CatalogEntry& entry);
/// Both catalog lists plus the trivial group, sorted.
[[nodiscard]] std::vector<IsoClassName> expected_total(const CatalogEntry& entry);

[[nodiscard]] nlohmann::ordered_json names_json(const std::vector<IsoClassName>& names);
[[nodiscard]] nlohmann::ordered_json to_json(const Comparison& c);
[[nodiscard]] nlohmann::ordered_json to_json(const GraphReport& report);

}  // namespace tsg::census
