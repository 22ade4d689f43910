#include "property/properties.hpp"

#include <gtest/gtest.h>

namespace tsg::testing {
namespace {

void expect_ok(const PropertyRun& run, std::size_t min_cases = 100)
{
    EXPECT_GE(run.cases, min_cases) << run.name;
    EXPECT_EQ(run.failures, 0U) << run.name << ": " << run.first_failure;
}

TEST(Property, ClassEquationAndLagrange)
{
    expect_ok(class_equation_and_lagrange(11));
    expect_ok(class_equation_and_lagrange(12));
}

TEST(Property, FilterVerdictsAreConjugationInvariant)
{
    expect_ok(filter_conjugation_invariance(21, 400));
}

TEST(Property, MovesAreInvolutions)
{
    expect_ok(move_involution(31, 200));
}

TEST(Property, FamilyClosureIsIdempotent)
{
    expect_ok(closure_idempotence(41));
}

TEST(Property, CanonicalFormIgnoresLabels)
{
    expect_ok(canonical_relabeling_invariance(51, 200));
}

TEST(Property, ReversingAdmissibleSquareIsPositive)
{
    expect_ok(reversing_implies_positive_square(61, 200));
}

TEST(Property, ReportsAreByteDeterministic)
{
    expect_ok(report_determinism(71));
}

}  // namespace
}  // namespace tsg::testing
