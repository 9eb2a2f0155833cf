#include <gtest/gtest.h>

#include "oracles/fuzz.hpp"
#include "threebox/error.hpp"
#include "threebox/inequality.hpp"
#include "threebox/scm.hpp"

namespace threebox::inequality {
namespace {

TEST(Compact, FullTableViolatesForOutcomeZero) {
    const auto r = compact_check(three_box_behavior());
    ASSERT_TRUE(r.violated());
    EXPECT_EQ(r.worst().lhs, make_rational(10, 9));
    EXPECT_EQ(r.worst().label(), "i=0");
    EXPECT_EQ(r.violations().size(), 1U);
}

TEST(Compact, RestrictedTableHolds) {
    const auto r = compact_check(restrict(three_box_behavior(), {1, 2}));
    EXPECT_FALSE(r.violated());
    for (const auto& e : r.entries) {
        EXPECT_LE(e.lhs, Rational(1));
    }
}

TEST(Pairwise, FullTableViolatesOnPairsWithThirdBox) {
    const auto r = pairwise_check(three_box_behavior());
    ASSERT_TRUE(r.violated());
    EXPECT_EQ(r.entries.size(), 12U);
    std::vector<std::string> labels;
    for (const auto& e : r.violations()) {
        labels.push_back(e.label());
        EXPECT_EQ(e.lhs, make_rational(10, 9));
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"line 1, kl=13", "line 1, kl=23"}));
    EXPECT_EQ(r.worst().label(), "line 1, kl=13");
}

TEST(Pairwise, LineOneOnPairTwoThree) {
    const auto r = pairwise_check(restrict(three_box_behavior(), {2, 3}));
    ASSERT_EQ(r.violations().size(), 1U);
    EXPECT_EQ(r.violations()[0].label(), "line 1, kl=23");
    EXPECT_EQ(r.violations()[0].lhs, make_rational(10, 9));
}

TEST(Pairwise, BoundaryIsNotAViolation) {
    const auto half = make_rational(1, 2);
    const Column a{half, Rational(0), half, Rational(0)};
    const Column b{Rational(0), half, Rational(0), half};
    const Behavior edge({{1, a}, {2, b}});
    EXPECT_FALSE(pairwise_check(edge).violated());
    EXPECT_FALSE(compact_check(edge).violated());
    EXPECT_EQ(pairwise_check(edge).worst().lhs, Rational(1));
}

TEST(Inequality, NeedsTwoChoices) {
    const auto one = restrict(three_box_behavior(), {3});
    EXPECT_THROW(compact_check(one), ContractViolation);
    EXPECT_THROW(pairwise_check(one), ContractViolation);
}

TEST(Inequality, FormNamesAndRendering) {
    EXPECT_EQ(parse_form("compact"), Form::compact);
    EXPECT_EQ(parse_form(form_name(Form::pairwise)), Form::pairwise);
    EXPECT_THROW(parse_form("dual"), ParseError);
    const auto md = to_markdown(pairwise_check(three_box_behavior()));
    EXPECT_NE(md.find("**line 1, kl=13**"), std::string::npos);
    EXPECT_NE(to_json(compact_check(three_box_behavior())).find("10/9"), std::string::npos);
}

TEST(InequalityProperty, CompactAndPairwiseAgreeOnFuzzedBehaviors) {
    std::mt19937_64 rng(20241);
    const std::vector<std::vector<int>> scopes{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}};
    for (int trial = 0; trial < 12000; ++trial) {
        const auto b = fuzz::random_behavior(rng, scopes[static_cast<std::size_t>(trial) % scopes.size()], 4);
        const auto c = compact_check(b);
        const auto p = pairwise_check(b);
        ASSERT_EQ(c.violated(), p.violated()) << to_json(b);
        if (c.violated()) {
            ASSERT_EQ(c.worst().lhs, p.worst().lhs) << to_json(b);
        }
    }
}

TEST(InequalityProperty, NoViolationWithoutParameterArrow) {
    std::mt19937_64 rng(7);
    const std::vector<int> choices{1, 2, 3};
    for (const auto& name : {"pure", "pure+o", "realist", "realist+o"}) {
        const auto space = feasibility::enumerate_strategies(dag::DagVariant::parse(name), choices);
        for (int trial = 0; trial < 300; ++trial) {
            const auto b = fuzz::random_mixture(rng, space, 1 + trial % 4);
            ASSERT_FALSE(pairwise_check(b).violated()) << name << "\n" << to_json(b);
            ASSERT_FALSE(compact_check(b).violated()) << name << "\n" << to_json(b);
        }
    }
    for (auto c : {scm::CatalogCase::a, scm::CatalogCase::b1}) {
        EXPECT_FALSE(pairwise_check(scm::induced_behavior(scm::catalog(c), choices)).violated());
    }
}

}  // namespace
}  // namespace threebox::inequality
