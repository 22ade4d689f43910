#include "tsg/common/error.hpp"
#include "tsg/perm/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace tsg::perm {
namespace {

DomainPtr six()
{
    return Domain::numbered(6);
}

TEST(Permutation, RoundTripsCanonicalCycleNotation)
{
    const auto d = six();
    EXPECT_EQ(parse_permutation("(1 4 2 5 3 6)", d).to_string(), "(1 4 2 5 3 6)");
    EXPECT_EQ(parse_permutation("(4 2 5 3 6 1)", d).to_string(), "(1 4 2 5 3 6)");
    EXPECT_EQ(parse_permutation("(3 6)(1 4 2 5)", d).to_string(), "(1 4 2 5)(3 6)");
    EXPECT_EQ(parse_permutation("  id ", d).to_string(), "id");
    EXPECT_TRUE(parse_permutation("id", d).is_identity());
}

TEST(Permutation, ComposesRightToLeft)
{
    const auto d = six();
    const auto p = parse_permutation("(1 2)", d);
    const auto q = parse_permutation("(1 4)(2 5)(3 6)", d);
    // (p*q)(1) = p(q(1)) = p(4) = 4
    EXPECT_EQ((p * q).apply("1"), "4");
    EXPECT_EQ((p * q).to_string(), "(1 4 2 5)(3 6)");
    EXPECT_EQ((q * p).to_string(), "(1 5 2 4)(3 6)");
}

TEST(Permutation, OrderInverseAndPowers)
{
    const auto d = six();
    const auto p = parse_permutation("(1 4 2 5 3 6)", d);
    EXPECT_EQ(p.order(), 6U);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ(p.pow(3).to_string(), "(1 5)(2 6)(3 4)");
    EXPECT_EQ(p.pow(-1), p.inverse());
    EXPECT_TRUE(p.pow(6).is_identity());
    EXPECT_EQ(parse_permutation("(1 2)(3 4 5)", d).order(), 6U);
    EXPECT_TRUE(parse_permutation("(1 2)(3 4)", d).is_involution());
    EXPECT_FALSE(Permutation::identity(d).is_involution());
}

TEST(Permutation, CycleType)
{
    const auto p = parse_permutation("(1 2)(3 4 5)", six());
    EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Permutation, ParseErrorsCarryPositions)
{
    const auto d = six();
    auto position = [&](std::string_view text) -> std::size_t {
        try {
            (void)parse_permutation(text, d);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position("(1 2"), 4U);
    EXPECT_EQ(position("(1 7)"), 3U);
    EXPECT_EQ(position("(1 2)(2 3)"), 6U);
    EXPECT_EQ(position("1 2"), 0U);
    EXPECT_EQ(position("(1)"), 2U);
    EXPECT_EQ(position("()"), 1U);
    EXPECT_EQ(position(""), 0U);
    EXPECT_EQ(position("(1,2)"), 1U);
}

TEST(Permutation, MultiCharacterLabels)
{
    const auto d = Domain::make({"v", "w", "1", "2", "10"});
    ASSERT_EQ(d->labels().front(), "1");
    EXPECT_EQ(d->labels()[2], "10");
    EXPECT_EQ(d->labels().back(), "w");
    const auto p = parse_permutation("(w v)(10 1)", d);
    EXPECT_EQ(p.to_string(), "(1 10)(v w)");
    EXPECT_EQ(p.apply("v"), "w");
}

TEST(Permutation, NaturalLabelOrder)
{
    EXPECT_TRUE(label_less("2", "10"));
    EXPECT_TRUE(label_less("10", "a"));
    EXPECT_FALSE(label_less("b", "a"));
    EXPECT_THROW((void)Domain::make({"1", "1"}), InputError);
    EXPECT_THROW((void)Domain::make({"a b"}), InputError);
}

TEST(Permutation, RejectsCrossDomainProducts)
{
    const auto a = parse_permutation("(1 2)", Domain::numbered(3));
    const auto b = parse_permutation("(1 2)", Domain::numbered(4));
    EXPECT_THROW((void)(a * b), InputError);
}

TEST(Permutation, ProductMatchesPointwiseComposition)
{
    std::mt19937_64 rng(5);
    const auto d = Domain::numbered(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> x(7);
        std::vector<Point> y(7);
        std::iota(x.begin(), x.end(), Point{0});
        std::iota(y.begin(), y.end(), Point{0});
        std::ranges::shuffle(x, rng);
        std::ranges::shuffle(y, rng);
        const auto p = Permutation::from_images(d, x);
        const auto q = Permutation::from_images(d, y);
        const auto pq = p * q;
        for (Point i = 0; i < 7; ++i) {
            ASSERT_EQ(pq(i), x[y[i]]);
        }
        ASSERT_EQ(parse_permutation(pq.to_string(), d), pq);
    }
}

}  // namespace
}  // namespace tsg::perm
