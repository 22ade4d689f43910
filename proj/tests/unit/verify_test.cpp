#include "tsg/census/verify.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/perm/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace tsg::census {
namespace {

const char* const kKnownFailure = "k33.generating-set.(Z3xZ3):Z2";

const Report& clean_report()
{
    static const Report r = verify_catalog();
    return r;
}

std::vector<std::string> failed_ids(const Report& r)
{
    std::vector<std::string> out;
    for (const auto& item : r.items) {
        if (!item.pass) {
            out.push_back(item.id);
        }
    }
    return out;
}

graph::Graph drop_first_edge(const graph::Graph& g)
{
    auto edges = g.edge_labels();
    edges.erase(edges.begin());
    const auto labels = g.domain()->labels();
    return graph::Graph::make({labels.begin(), labels.end()}, edges);
}

TEST(Verify, CleanRunFailsOnlyTheSwappedGeneratingSet)
{
    const auto& r = clean_report();
    EXPECT_GT(r.items.size(), 90U);
    EXPECT_EQ(failed_ids(r), std::vector<std::string>{kKnownFailure});
    const auto* item = r.find(kKnownFailure);
    ASSERT_NE(item, nullptr);
    EXPECT_EQ(item->computed["iso"], "D3xZ3");
    EXPECT_EQ(item->expected["iso"], "(Z3xZ3):Z2");
}

TEST(Verify, ItemIdsAreUniqueAndComplete)
{
    std::vector<std::string> ids;
    for (const auto& item : clean_report().items) {
        ids.push_back(item.id);
        EXPECT_FALSE(item.claim.empty()) << item.id;
        EXPECT_FALSE(item.cite.empty()) << item.id;
    }
    auto sorted = ids;
    std::ranges::sort(sorted);
    EXPECT_EQ(std::ranges::adjacent_find(sorted), sorted.end());
    for (const char* name : {"K33", "K6", "K331", "K44minus", "P7", "P8", "P9", "P10"}) {
        EXPECT_NE(clean_report().find(std::string("aut.order.") + name), nullptr) << name;
        EXPECT_NE(clean_report().find(std::string("catalog.") + name + ".subgroups"), nullptr) << name;
    }
    for (const char* name : {"K33", "K331", "K44minus", "P7", "P8", "P9"}) {
        EXPECT_NE(clean_report().find(std::string("catalog.") + name + ".positive-contained"), nullptr) << name;
        EXPECT_NE(clean_report().find(std::string("candidates.") + name + ".tsg"), nullptr) << name;
    }
    EXPECT_EQ(clean_report().find("candidates.K6.tsg"), nullptr);
    EXPECT_EQ(std::ranges::count_if(ids, [](const std::string& id) { return id.starts_with("k33.generating-set."); }),
              14);
}

TEST(Verify, MutatedCatalogIsCaught)
{
    VerifyOptions o;
    for (auto& e : o.catalog) {
        if (e.graph == "K331") {
            e.positive.push_back(IsoClassName::parse("Z6"));
            std::ranges::sort(e.positive);
        }
    }
    const auto r = verify_catalog(o);
    const auto* contained = r.find("catalog.K331.positive-contained");
    ASSERT_NE(contained, nullptr);
    EXPECT_FALSE(contained->pass);
    EXPECT_NE(contained->computed.dump().find("midpoint-collision"), std::string::npos);
    const auto* equal = r.find("candidates.K331.tsg-plus");
    ASSERT_NE(equal, nullptr);
    EXPECT_FALSE(equal->pass);
    EXPECT_EQ(failed_ids(r), (std::vector<std::string>{kKnownFailure, "catalog.K331.positive-contained",
                                                       "catalog.K331.realizable-contained",
                                                       "candidates.K331.tsg-plus", "candidates.K331.tsg"}));
}

TEST(Verify, OneEdgePerturbationOfEveryBuiltinIsCaught)
{
    for (const auto& name : graph::builtin_names()) {
        VerifyOptions o;
        o.graph_overrides.emplace(name, drop_first_edge(graph::builtin_graph(name)));
        const auto r = verify_catalog(o);
        const auto* order = r.find("aut.order." + name);
        ASSERT_NE(order, nullptr) << name;
        EXPECT_FALSE(order->pass) << name;
        EXPECT_GT(r.failed(), 1U) << name;
    }
}

TEST(Verify, ReportsAreByteDeterministic)
{
    EXPECT_EQ(to_json(verify_catalog()).dump(), to_json(clean_report()).dump());
    EXPECT_EQ(to_text(verify_catalog()), to_text(clean_report()));
}

TEST(Verify, JsonAndTextShapes)
{
    const auto j = to_json(clean_report());
    EXPECT_EQ(j["summary"]["fail"], 1);
    EXPECT_EQ(j["summary"]["pass"], clean_report().items.size() - 1);
    EXPECT_EQ(j["items"][0].size(), 6U);
    const auto text = to_text(clean_report());
    EXPECT_NE(text.find(std::string("FAIL ") + kKnownFailure + ": "), std::string::npos);
    EXPECT_NE(text.find("PASS family.closure-size: "), std::string::npos);
    EXPECT_TRUE(text.ends_with(std::to_string(clean_report().passed()) + " passed, 1 failed\n"));
}

TEST(Verify, ExhaustiveColoringMatchesKnownCases)
{
    const auto k331 = graph::builtin_graph("K331");
    EXPECT_FALSE(exhaustive_sphere_coloring_exists(perm::parse_permutation("(1 4)(2 5)(3 6)", k331.domain()), k331));
    EXPECT_TRUE(exhaustive_sphere_coloring_exists(perm::Permutation::identity(k331.domain()), k331));
}

}  // namespace
}  // namespace tsg::census
