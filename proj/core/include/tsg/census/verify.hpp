#pragma once

#include "tsg/census/catalog.hpp"
#include "tsg/graph/graph.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace tsg::census {

struct VerifyOptions {
    Catalog catalog = default_catalog();
    /// Replaces built-ins by name wherever verification uses them (fault injection).
    std::map<std::string, graph::Graph> graph_overrides;
    /// Also runs the subgroup pipeline for K6 and P10 and checks their catalog entries.
    bool full_pipeline = false;
};

struct ReportItem {
    std::string id;
    std::string claim;
    std::string cite;
    bool pass = false;
    nlohmann::ordered_json computed;
    nlohmann::ordered_json expected;
};

struct Report {
    std::vector<ReportItem> items;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const { return items.size() - passed(); }
    [[nodiscard]] bool ok() const { return failed() == 0; }
    /// nullptr when no item has this id.
    [[nodiscard]] const ReportItem* find(std::string_view id) const;
};

/// Recomputes every checked result and compares it with the expected value or
/// the catalog. Never throws for computation failures: an exception inside a
/// check becomes a failed item whose "computed" field holds the error.
[[nodiscard]] Report verify_catalog(const VerifyOptions& options = {});

/// `{"items":[{"id","claim","cite","status","computed","expected"}],"summary":{"pass","fail"}}`
[[nodiscard]] nlohmann::ordered_json to_json(const Report& report);
/// One line per item; failures add computed/expected/cite lines.
[[nodiscard]] std::string to_text(const Report& report);

/// Exhaustive version of obstruct::sphere_coloring_conflict: tries all 2^k side
/// assignments of the non-fixed vertices. Limited to 20 non-fixed vertices.
[[nodiscard]] bool exhaustive_sphere_coloring_exists(const graph::Permutation& alpha, const graph::Graph& g);

}  // namespace tsg::census
