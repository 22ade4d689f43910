// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "property/properties.hpp"
#include "tsg/census/analysis.hpp"
#include "tsg/census/catalog.hpp"
#include "tsg/census/verify.hpp"
#include "tsg/cli.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/family.hpp"
#include "tsg/graph/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

namespace {

using namespace tsg;

struct Criterion {
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            problems.push_back(what);
        }
    }
};

const census::Report& report()
{
    static const census::Report r = census::verify_catalog();
    return r;
}

// Every verify item whose id starts with one of `prefixes` must pass; at least `min_items` must match.
void require_items(Criterion& c, const std::vector<std::string>& prefixes, std::size_t min_items)
{
    std::size_t seen = 0;
    for (const auto& item : report().items) {
        const bool match = std::ranges::any_of(prefixes, [&](const std::string& p) { return item.id.starts_with(p); });
        if (!match) {
            continue;
        }
        ++seen;
        c.require(item.pass, item.id + " computed " + item.computed.dump());
    }
    c.require(seen >= min_items, "only " + std::to_string(seen) + " verify items matched");
}

std::set<std::string> names(const std::vector<perm::IsoClassName>& v)
{
    std::set<std::string> out;
    for (const auto& n : v) {
        out.insert(n.str());
    }
    return out;
}

Criterion family_closure()
{
    Criterion c;
    using Row = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
    const std::multiset<Row> want = {
        {6, 15, {5, 5, 5, 5, 5, 5}},       {7, 15, {6, 4, 4, 4, 4, 4, 4}},     {7, 15, {5, 5, 5, 4, 4, 4, 3}},
        {8, 15, {4, 4, 4, 4, 4, 4, 3, 3}}, {8, 15, {5, 4, 4, 4, 4, 3, 3, 3}}, {9, 15, {4, 4, 4, 3, 3, 3, 3, 3, 3}},
        {10, 15, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}},
    };
    const auto from_k6 = graph::family_closure(graph::builtin_graph("K6"));
    const auto from_p10 = graph::family_closure(graph::builtin_graph("P10"));
    std::multiset<Row> got;
    std::set<graph::CanonicalForm> k6_forms;
    std::set<graph::CanonicalForm> p10_forms;
    for (const auto& m : from_k6) {
        got.emplace(m.vertex_count, m.edge_count, m.degree_sequence);
        k6_forms.insert(m.form);
    }
    for (const auto& m : from_p10) {
        p10_forms.insert(m.form);
    }
    c.require(from_k6.size() == 7, "closure of K6 has " + std::to_string(from_k6.size()) + " classes");
    c.require(got == want, "invariant table differs");
    c.require(k6_forms == p10_forms, "closure of P10 differs from closure of K6");
    require_items(c, {"family."}, 10);
    return c;
}

Criterion automorphism_groups()
{
    Criterion c;
    require_items(c, {"aut.order.", "aut.iso.", "aut.restriction."}, 18);
    const std::vector<std::pair<std::string, std::size_t>> orders = {
        {"K33", 72}, {"K331", 72}, {"K44minus", 72}, {"P7", 36}, {"P8", 8}, {"P9", 12}, {"K6", 720}, {"P10", 120}};
    for (const auto& [name, order] : orders) {
        const auto* item = report().find("aut.order." + name);
        c.require(item != nullptr && item->computed == order, "order of Aut(" + name + ")");
    }
    for (const auto& [name, iso] : {std::pair{"P7", "D3xD3"}, std::pair{"P8", "D4"}, std::pair{"P9", "D6"}}) {
        const auto* item = report().find(std::string("aut.iso.") + name);
        c.require(item != nullptr && item->computed == iso, std::string("iso of Aut(") + name + ")");
    }
    return c;
}

Criterion k33_group_theory()
{
    Criterion c;
    require_items(c, {"k33.conjugacy-classes", "k33.subgroup-isos", "k33.subgroup-absent", "k33.generating-set."}, 17);
    const auto r = census::analyze_graph("K33");
    c.require(r.conjugacy_classes.size() == 9, "conjugacy class count");
    std::multiset<std::size_t> sizes;
    for (const auto& cls : r.conjugacy_classes) {
        sizes.insert(cls.size);
    }
    c.require(sizes == std::multiset<std::size_t>{1, 4, 4, 6, 6, 9, 12, 12, 18}, "class size multiset");
    const std::set<std::string> want = {"1",  "Z2",         "Z3",         "Z4",         "D2",
                                        "Z6", "D3",         "D4",         "D6",         "Z3xZ3",
                                        "D3xZ3", "(Z3xZ3):Z2", "(Z3xZ3):Z4", "D3xD3",     "(D3xD3):Z2"};
    c.require(names(r.subgroup_isos) == want, "subgroup iso classes");
    return c;
}

Criterion element_filters()
{
    Criterion c;
    require_items(c, {"filter.K33.positive.", "filter.K33.circle.", "filter.K33.reversing.", "filter.K331."}, 12);
    return c;
}

Criterion candidate_sets()
{
    Criterion c;
    struct Row {
        std::string graph;
        std::set<std::string> positive;
        std::set<std::string> total;
    };
    const std::vector<Row> rows = {
        {"K331", {"1", "Z2", "Z3", "D2", "D3"}, {"1", "Z2", "Z3", "D2", "D3", "Z4", "D4"}},
        {"K44minus",
         {"1", "Z2", "Z3", "Z6", "D2", "D3", "D6"},
         {"1", "Z2", "Z3", "Z6", "D2", "D3", "D6", "Z4", "D4"}},
        {"P7", {"1", "Z2", "Z3", "D3"}, {"1", "Z2", "Z3", "D3", "D2"}},
        {"P8", {"1", "Z2"}, {"1", "Z2"}},
        {"P9", {"1", "Z2", "Z3", "Z6", "D2", "D3", "D6"}, {"1", "Z2", "Z3", "Z6", "D2", "D3", "D6"}},
    };
    for (const auto& row : rows) {
        const auto r = census::analyze_graph(row.graph);
        c.require(names(r.tsg_plus_candidates) == row.positive, row.graph + " TSG+ candidates");
        c.require(names(r.tsg_candidates) == row.total, row.graph + " TSG candidates");
    }
    const auto k33 = census::analyze_graph("K33");
    const auto* entry = census::find_entry(census::default_catalog(), "K33");
    c.require(entry != nullptr && names(k33.tsg_plus_candidates) == names(census::expected_positive(*entry)),
              "K33 TSG+ candidates");
    c.require(k33.tsg_candidates == k33.subgroup_isos && k33.subgroup_isos.size() == 15, "K33 TSG candidates");
    require_items(c, {"candidates."}, 12);
    return c;
}

Criterion property_suites()
{
    Criterion c;
    using Fn = testing::PropertyRun (*)(std::uint64_t, std::size_t);
    const std::vector<Fn> suites = {
        testing::class_equation_and_lagrange,      testing::filter_conjugation_invariance,
        testing::move_involution,                  testing::closure_idempotence,
        testing::canonical_relabeling_invariance,  testing::reversing_implies_positive_square,
        testing::report_determinism,
    };
    std::uint64_t seed = 0x5eed;
    for (const auto fn : suites) {
        const auto run = fn(seed++, testing::kDefaultCases);
        c.require(run.cases >= 100, run.name + ": only " + std::to_string(run.cases) + " cases");
        c.require(run.failures == 0, run.name + ": " + run.first_failure);
    }
    return c;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content)
{
    const auto dir = std::filesystem::temp_directory_path() / "tsg_acceptance";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

// A failing line names the item and its claim; the cite follows on its own line.
bool names_violation(const std::string& text, const census::ReportItem& item)
{
    const auto at = text.find("FAIL " + item.id + ": " + item.claim + "\n");
    return at != std::string::npos && text.find("     cite: " + item.cite, at) != std::string::npos;
}

Criterion fault_injection()
{
    Criterion c;
    auto doc = nlohmann::ordered_json::parse(census::default_catalog_json());
    for (auto& e : doc) {
        if (e["graph"] == "K331") {
            e["positive"].push_back("Z6");
        }
    }
    const auto catalog_path = write_temp("catalog.json", doc.dump(2));
    const auto mutated = run_cli({"verify", "--catalog", catalog_path.string()});
    const auto* item = report().find("catalog.K331.positive-contained");
    c.require(mutated.code != 0, "mutated catalog: verify exited 0");
    c.require(item != nullptr, "no catalog.K331.positive-contained item");
    c.require(item != nullptr && names_violation(mutated.out, *item), "mutated catalog: violation not named");

    for (const auto& name : graph::builtin_names()) {
        auto g = graph::graph_to_json(graph::builtin_graph(name));
        g["edges"].erase(g["edges"].begin());
        const auto path = write_temp(name + ".json", g.dump());
        const auto res = run_cli({"verify", "--override", name + "=@" + path.string()});
        const auto* order = report().find("aut.order." + name);
        c.require(res.code != 0, name + " perturbed: verify exited 0");
        c.require(order != nullptr && names_violation(res.out, *order), name + " perturbed: aut.order not named");
    }
    return c;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, Criterion (*)()>> criteria = {
        {"1 family closure", family_closure},
        {"2 automorphism groups", automorphism_groups},
        {"3 K33 group theory", k33_group_theory},
        {"4 element filters", element_filters},
        {"5 candidate-set equalities", candidate_sets},
        {"6 property suites", property_suites},
        {"7 fault injection", fault_injection},
    };
    int failed = 0;
    for (const auto& [label, fn] : criteria) {
        Criterion c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (c.problems.empty() ? "PASS " : "FAIL ") << label << '\n';
        for (const auto& p : c.problems) {
            std::cout << "    " << p << '\n';
        }
        failed += c.problems.empty() ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
