#include "tsg/census/analysis.hpp"

#include "tsg/common/error.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/obstruct/filters.hpp"

#include <algorithm>

namespace tsg::census {

namespace {

void insert_sorted(std::vector<IsoClassName>& names, const IsoClassName& n)
{
    if (std::ranges::find(names, n) == names.end()) {
        names.push_back(n);
        std::ranges::sort(names);
    }
}

std::vector<Exclusion> exclusions(const std::vector<SubgroupClassReport>& classes,
                                  const std::vector<IsoClassName>& candidates, bool plus)
{
    std::vector<Exclusion> out;
    for (const auto& c : classes) {
        if (std::ranges::find(candidates, c.iso) != candidates.end()) {
            continue;
        }
        const auto& v = plus ? c.tsg_plus : c.tsg;
        const std::string code(obstruct::reason_code(*v.reason));
        auto it = std::ranges::find_if(out, [&](const Exclusion& e) { return e.first == c.iso; });
        if (it == out.end()) {
            out.push_back({c.iso, {code}});
        } else if (std::ranges::find(it->second, code) == it->second.end()) {
            it->second.push_back(code);
        }
    }
    for (auto& e : out) {
        std::ranges::sort(e.second);
    }
    std::ranges::sort(out, [](const Exclusion& a, const Exclusion& b) { return a.first < b.first; });
    return out;
}

nlohmann::ordered_json exclusions_json(const std::vector<Exclusion>& ex)
{
    auto j = nlohmann::ordered_json::object();
    for (const auto& [name, reasons] : ex) {
        j[name.str()] = reasons;
    }
    return j;
}

}  // namespace

std::vector<IsoClassName> expected_positive(const CatalogEntry& entry)
{
    std::vector<IsoClassName> out{IsoClassName::parse("1")};
    for (const auto& n : entry.positive) {
        insert_sorted(out, n);
    }
    return out;
}

std::vector<IsoClassName> expected_total(const CatalogEntry& entry)
{
    auto out = expected_positive(entry);
    for (const auto& n : entry.realizable_only) {
        insert_sorted(out, n);
    }
    return out;
}

Comparison compare_sets(std::vector<IsoClassName> computed, std::vector<IsoClassName> expected)
{
    std::ranges::sort(computed);
    std::ranges::sort(expected);
    Comparison c;
    std::ranges::set_difference(expected, computed, std::back_inserter(c.missing));
    std::ranges::set_difference(computed, expected, std::back_inserter(c.extra));
    c.outcome = !c.missing.empty() ? "missing" : !c.extra.empty() ? "superset" : "equal";
    c.computed = std::move(computed);
    c.expected = std::move(expected);
    return c;
}

GraphReport analyze_graph(std::string_view name, const AnalysisOptions& options, const Catalog& catalog)
{
    const auto canonical = graph::canonical_builtin_name(name);
    if (!canonical) {
        throw InputError("unknown graph '" + std::string(name) + "'");
    }
    return analyze_graph(graph::builtin_graph(*canonical), *canonical, options, catalog);
}

GraphReport analyze_graph(const graph::Graph& g, std::string name, const AnalysisOptions& options,
                          const Catalog& catalog)
{
    GraphReport r;
    r.graph = std::move(name);
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    const auto aut = graph::automorphism_group(g);
    r.aut_order = aut.order();
    r.aut_iso = perm::identify_group(aut);
    r.conjugacy_classes = perm::conjugacy_classes(aut);

    auto policy = options.policy;
    if (options.full_pipeline) {
        policy.max_group_order = std::max(policy.max_group_order, perm::kTableCap);
    }
    if (r.aut_order > policy.max_group_order) {
        r.pipeline_skipped = true;
        return r;
    }

    const obstruct::Obstructions obs(g);
    const auto lattice = perm::enumerate_subgroups(aut, policy);
    for (const auto& cls : lattice.classes) {
        const auto h = cls.representative().as_group(g.domain());
        SubgroupClassReport sc{cls.iso,
                               cls.order(),
                               cls.members.size(),
                               cls.representative().generators,
                               obs.group_tsg_plus_candidate(h),
                               obs.group_tsg_candidate(h)};
        insert_sorted(r.subgroup_isos, sc.iso);
        if (sc.tsg_plus.passed()) {
            insert_sorted(r.tsg_plus_candidates, sc.iso);
        }
        if (sc.tsg.passed()) {
            insert_sorted(r.tsg_candidates, sc.iso);
        }
        r.subgroup_classes.push_back(std::move(sc));
    }
    r.tsg_plus_exclusions = exclusions(r.subgroup_classes, r.tsg_plus_candidates, true);
    r.tsg_exclusions = exclusions(r.subgroup_classes, r.tsg_candidates, false);

    if (const auto* entry = find_entry(catalog, r.graph)) {
        r.positive_comparison = compare_sets(r.tsg_plus_candidates, expected_positive(*entry));
        r.total_comparison = compare_sets(r.tsg_candidates, expected_total(*entry));
    }
    return r;
}

nlohmann::ordered_json names_json(const std::vector<IsoClassName>& names)
{
    auto j = nlohmann::ordered_json::array();
    for (const auto& n : names) {
        j.push_back(n.str());
    }
    return j;
}

nlohmann::ordered_json to_json(const Comparison& c)
{
    return {{"outcome", c.outcome},
            {"computed", names_json(c.computed)},
            {"expected", names_json(c.expected)},
            {"missing", names_json(c.missing)},
            {"extra", names_json(c.extra)}};
}

nlohmann::ordered_json to_json(const GraphReport& r)
{
    nlohmann::ordered_json j;
    j["graph"] = r.graph;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : r.conjugacy_classes) {
        classes.push_back({{"representative", c.representative.to_string()}, {"size", c.size}});
    }
    j["automorphisms"] = {{"order", r.aut_order}, {"iso", r.aut_iso.str()}, {"conjugacy_classes", classes}};
    j["pipeline"] = r.pipeline_skipped ? "pipeline-skipped" : "run";
    if (r.pipeline_skipped) {
        return j;
    }
    auto subgroups = nlohmann::ordered_json::array();
    for (const auto& s : r.subgroup_classes) {
        auto gens = nlohmann::ordered_json::array();
        for (const auto& p : s.generators) {
            gens.push_back(p.to_string());
        }
        subgroups.push_back({{"iso", s.iso.str()},
                             {"order", s.order},
                             {"conjugates", s.conjugates},
                             {"generators", gens},
                             {"tsg_plus", obstruct::to_json(s.tsg_plus)},
                             {"tsg", obstruct::to_json(s.tsg)}});
    }
    j["subgroup_classes"] = subgroups;
    j["subgroup_isos"] = names_json(r.subgroup_isos);
    j["tsg_plus_candidates"] = names_json(r.tsg_plus_candidates);
    j["tsg_candidates"] = names_json(r.tsg_candidates);
    j["exclusions"] = {{"tsg_plus", exclusions_json(r.tsg_plus_exclusions)},
                       {"tsg", exclusions_json(r.tsg_exclusions)}};
    if (r.positive_comparison) {
        j["catalog"] = {{"positive", to_json(*r.positive_comparison)}, {"total", to_json(*r.total_comparison)}};
    } else {
        j["catalog"] = nullptr;
    }
    return j;
}

}  // namespace tsg::census
