#include "tsg/common/error.hpp"
#include "tsg/perm/iso_class.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace tsg::perm {
namespace {

PermGroup group(std::size_t n, std::initializer_list<const char*> gens)
{
    const auto d = Domain::numbered(n);
    std::vector<Permutation> ps;
    for (const char* g : gens) {
        ps.push_back(parse_permutation(g, d));
    }
    return PermGroup(d, ps);
}

PermGroup conjugated(const PermGroup& g, std::mt19937_64& rng)
{
    std::vector<Point> images(g.domain()->size());
    std::iota(images.begin(), images.end(), Point{0});
    std::ranges::shuffle(images, rng);
    const auto c = Permutation::from_images(g.domain(), images);
    std::vector<Permutation> gens;
    for (const auto& x : g.generators()) {
        gens.push_back(c * x * c.inverse());
    }
    return PermGroup(g.domain(), gens);
}

TEST(IsoClass, CatalogReferencesIdentifyThemselves)
{
    EXPECT_EQ(iso_catalog().size(), 29U);
    std::mt19937_64 rng(3);
    for (const auto& entry : iso_catalog()) {
        EXPECT_EQ(identify_group(entry.reference).str(), entry.name);
        EXPECT_EQ(identify_group(conjugated(entry.reference, rng)).str(), entry.name);
        EXPECT_EQ(IsoClassName::parse(entry.name).group_order(), entry.reference.order());
    }
}

TEST(IsoClass, FingerprintsAreDistinct)
{
    // Distinct fingerprints make the shortlist a single candidate for catalog groups.
    std::set<GroupFingerprint> seen;
    for (const auto& entry : iso_catalog()) {
        EXPECT_TRUE(seen.insert(entry.fingerprint).second) << entry.name;
    }
}

TEST(IsoClass, FingerprintOfS4)
{
    const auto f = fingerprint(group(4, {"(1 2)", "(1 2 3 4)"}));
    EXPECT_EQ(f.order, 24U);
    EXPECT_FALSE(f.is_abelian);
    EXPECT_EQ(f.center_order, 1U);
    EXPECT_EQ(f.derived_subgroup_order, 12U);
    EXPECT_EQ(f.element_orders, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
}

TEST(IsoClass, NamesParseAndOrder)
{
    EXPECT_EQ(IsoClassName::parse("Z2xZ2").str(), "D2");
    EXPECT_THROW((void)IsoClassName::parse("Q8"), InputError);
    EXPECT_EQ(IsoClassName::unknown(8).str(), "unknown(order=8)");
    EXPECT_TRUE(IsoClassName::unknown(8).is_unknown());
    EXPECT_LT(IsoClassName::parse("Z6"), IsoClassName::parse("D6"));
    EXPECT_LT(IsoClassName::parse("Z3xZ3"), IsoClassName::parse("D6"));
    EXPECT_LT(IsoClassName::parse("D3"), IsoClassName::parse("Z6"));
}

TEST(IsoClass, UnknownFallback)
{
    EXPECT_EQ(identify_group(group(8, {"(1 2 3 4 5 6 7 8)"})).str(), "unknown(order=8)");
}

TEST(IsoClass, SmallDirectProducts)
{
    EXPECT_EQ(identify_group(group(6, {"(1 2 3)", "(1 2)", "(4 5)"})).str(), "D6");
    EXPECT_EQ(identify_group(group(6, {"(1 2 3)(4 5)"})).str(), "Z6");
    EXPECT_EQ(identify_group(group(6, {"(1 2)", "(3 4)", "(5 6)"})).str(), "Z2xZ2xZ2");
    EXPECT_EQ(identify_group(group(6, {"(1 2 3 4)", "(5 6)"})).str(), "Z2xZ4");
    EXPECT_EQ(identify_group(group(6, {"(1 2)(3 4)", "(1 3)(2 4)"})).str(), "D2");
}

TEST(IsoClass, InvertingVersusSwappingInvolution)
{
    // An involution inverting both Z3 factors gives the generalized dihedral group;
    // one swapping them gives D3 x Z3.
    EXPECT_EQ(identify_group(group(6, {"(1 2 3)", "(4 5 6)", "(1 2)(4 5)"})).str(), "(Z3xZ3):Z2");
    EXPECT_EQ(identify_group(group(6, {"(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"})).str(), "D3xZ3");
}

TEST(IsoClass, IsomorphismIsAHomomorphismBijection)
{
    const auto a = group(6, {"(1 2)(5 6)", "(1 4 2 5 3 6)"});
    const auto b = group(6, {"(1 2 3)", "(1 2)", "(4 5)"});
    const auto iso = find_isomorphism(a, b);
    ASSERT_TRUE(iso.has_value());
    const auto& m = iso->element_map;
    EXPECT_EQ(std::set<std::size_t>(m.begin(), m.end()).size(), a.order());
    for (std::size_t x = 0; x < a.order(); ++x) {
        for (std::size_t y = 0; y < a.order(); ++y) {
            const auto xy = *a.index_of(a.element(x) * a.element(y));
            ASSERT_EQ(b.element(m[xy]), b.element(m[x]) * b.element(m[y]));
        }
    }
    EXPECT_TRUE(is_isomorphic(a, b));
    EXPECT_FALSE(is_isomorphic(group(6, {"(1 2 3 4 5 6)"}), group(3, {"(1 2 3)", "(1 2)"})));
}

TEST(IsoClass, Embeddings)
{
    const auto s4 = group(4, {"(1 2)", "(1 2 3 4)"});
    EXPECT_TRUE(find_embedding(catalog_group("D4").reference, s4).has_value());
    EXPECT_TRUE(find_embedding(catalog_group("A4").reference, s4).has_value());
    EXPECT_FALSE(find_embedding(catalog_group("Z6").reference, s4).has_value());
    EXPECT_FALSE(find_embedding(catalog_group("Z2xZ2xZ2").reference, s4).has_value());

    const auto s6 = group(6, {"(1 2)", "(1 2 3 4 5 6)"});
    const auto& src = catalog_group("(D3xD3):Z2").reference;
    const auto emb = find_embedding(src, s6);
    ASSERT_TRUE(emb.has_value());
    const auto& m = emb->element_map;
    EXPECT_EQ(std::set<std::size_t>(m.begin(), m.end()).size(), src.order());
    for (std::size_t x = 0; x < src.order(); x += 7) {
        for (std::size_t y = 0; y < src.order(); ++y) {
            const auto xy = *src.index_of(src.element(x) * src.element(y));
            ASSERT_EQ(s6.element(m[xy]), s6.element(m[x]) * s6.element(m[y]));
        }
    }
}

}  // namespace
}  // namespace tsg::perm
