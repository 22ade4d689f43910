#include "tsg/common/error.hpp"
#include "tsg/graph/automorphisms.hpp"
#include "tsg/graph/builtins.hpp"
#include "tsg/perm/iso_class.hpp"
#include "property/properties.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include <numeric>
#include <random>

namespace tsg::graph {
namespace {

// Every permutation of the vertex set, checked edge by edge.
std::vector<Permutation> brute_force_automorphisms(const Graph& g)
{
    std::vector<Point> images(g.vertex_count());
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<Permutation> out;
    do {
        auto p = Permutation::from_images(g.domain(), images);
        if (g.is_automorphism(p)) {
            out.push_back(std::move(p));
        }
    } while (std::ranges::next_permutation(images).found);
    std::ranges::sort(out);
    return out;
}

TEST(Automorphisms, MatchBruteForceOnSmallBuiltins)
{
    for (const char* name : {"K33", "K6", "K331", "P7", "K44minus", "P8"}) {
        const auto g = builtin_graph(name);
        EXPECT_EQ(all_automorphisms(g), brute_force_automorphisms(g)) << name;
    }
}

TEST(Automorphisms, MatchBruteForceOnRandomGraphs)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
        const auto g = testing::random_graph(n, 0.45, rng);
        ASSERT_EQ(all_automorphisms(g), brute_force_automorphisms(g));
    }
}

TEST(Automorphisms, OrdersAndIsoClasses)
{
    struct Row {
        const char* name;
        std::size_t order;
        const char* iso;
    };
    for (const auto& [name, order, iso] :
         {Row{"K33", 72, "(D3xD3):Z2"}, Row{"K331", 72, "(D3xD3):Z2"}, Row{"K44minus", 72, "(D3xD3):Z2"},
          Row{"P7", 36, "D3xD3"}, Row{"P8", 8, "D4"}, Row{"P9", 12, "D6"}, Row{"K6", 720, "S6"},
          Row{"P10", 120, "S5"}}) {
        const auto aut = automorphism_group(builtin_graph(name));
        EXPECT_EQ(aut.order(), order) << name;
        EXPECT_EQ(perm::identify_group(aut).str(), iso) << name;
        EXPECT_LE(aut.generators().size(), 4U);
    }
}

TEST(Automorphisms, VertexPolicy)
{
    std::vector<std::string> vs;
    for (int i = 1; i <= 13; ++i) {
        vs.push_back(std::to_string(i));
    }
    const auto g = Graph::make(vs, {});
    EXPECT_THROW((void)all_automorphisms(g), LimitError);
    EXPECT_EQ(all_automorphisms(builtin_graph("P10"), AutomorphismPolicy{10}).size(), 120U);
}

TEST(Automorphisms, RestrictionToInvariantSubset)
{
    const auto g = builtin_graph("K331");
    const auto alpha = perm::parse_permutation("(1 4)(2 5)(3 6)", g.domain());
    const std::vector<std::string> core = {"1", "2", "3", "4", "5", "6"};
    const auto beta = restrict_automorphism(alpha, g, core);
    EXPECT_EQ(beta.to_string(), "(1 4)(2 5)(3 6)");
    EXPECT_EQ(beta.degree(), 6U);
    const auto bad = perm::parse_permutation("(1 2)", g.domain());
    EXPECT_THROW((void)restrict_automorphism(bad, g, std::vector<std::string>{"1", "7"}), InputError);
}

}  // namespace
}  // namespace tsg::graph
