#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/graph/canonical.hpp"
#include "property/properties.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace tsg::graph {
namespace {

TEST(Canonical, BuiltinsHaveDistinctForms)
{
    std::set<CanonicalForm> forms;
    for (const auto& name : builtin_names()) {
        EXPECT_TRUE(forms.insert(canonical_form(builtin_graph(name))).second) << name;
    }
}

TEST(Canonical, LeafCountIsAutomorphismOrder)
{
    for (const auto& name : builtin_names()) {
        const auto g = builtin_graph(name);
        EXPECT_EQ(canonical_labeling(g).leaf_automorphisms, automorphism_group(g).order()) << name;
    }
}

TEST(Canonical, RelabeledBuiltinsKeepTheirForm)
{
    std::mt19937_64 rng(23);
    for (const auto& name : builtin_names()) {
        const auto g = builtin_graph(name);
        for (int i = 0; i < 5; ++i) {
            const auto h = testing::random_relabeling(g, rng);
            EXPECT_EQ(canonical_form(h), canonical_form(g)) << name;
            const auto w = graph_isomorphism(g, h);
            ASSERT_TRUE(w.has_value());
            for (const auto& [a, b] : g.edges()) {
                EXPECT_TRUE(h.adjacent((*w)[a], (*w)[b]));
            }
        }
    }
}

TEST(Canonical, NonIsomorphicGraphs)
{
    // Same degree sequence, different structure: a 6-cycle versus two triangles.
    const auto c6 = Graph::make({"1", "2", "3", "4", "5", "6"},
                                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
    const auto tt = Graph::make({"1", "2", "3", "4", "5", "6"},
                                {{"1", "2"}, {"2", "3"}, {"3", "1"}, {"4", "5"}, {"5", "6"}, {"6", "4"}});
    EXPECT_NE(canonical_form(c6), canonical_form(tt));
    EXPECT_FALSE(graphs_isomorphic(c6, tt));
    EXPECT_FALSE(graph_isomorphism(c6, builtin_graph("K6")).has_value());
}

TEST(Canonical, RefinementSeparatesDegrees)
{
    const auto g = builtin_graph("K331");
    const auto colors = refined_degree_colors(g);
    const auto apex = g.point("7");
    for (Point p = 0; p < 7; ++p) {
        if (p != apex) {
            EXPECT_NE(colors[p], colors[apex]);
        }
    }
}

}  // namespace
}  // namespace tsg::graph
