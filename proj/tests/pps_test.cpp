#include <gtest/gtest.h>

#include <random>

#include "oracles/three_box_oracle.hpp"
#include "threebox/error.hpp"
#include "threebox/pps.hpp"

namespace threebox::pps {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(ThreeBox, PreAndPostStatesOverlapOneNinth) {
    EXPECT_EQ(hilbert::overlap_squared(three_box_post_state(), three_box_pre_state()), q(1, 9));
    EXPECT_EQ(hilbert::overlap_squared(hilbert::StateVector::basis(3, 0), three_box_pre_state()), q(1, 3));
}

TEST(ThreeBox, BoxThreeHitThenOverlapIsOneNinth) {
    // <phi| Pi^3_1 |psi> squared.
    const auto s = three_box_scenario();
    const auto psi = hilbert::outer_product(three_box_post_state());
    const auto projected = hilbert::apply_projector(s.intermediate(3)[1], psi);
    EXPECT_EQ(hilbert::trace_product(hilbert::Projector::onto(three_box_pre_state()), projected.state), q(1, 9));
}

TEST(ThreeBox, JointDistributionAnchors) {
    const auto s = three_box_scenario();
    EXPECT_EQ(joint_distribution(s, 2)[0][0], q(2, 3));
    EXPECT_EQ(joint_distribution(s, 3)[0][1], q(4, 9));
    const auto t1 = joint_distribution(s, 1);
    EXPECT_EQ(t1[0][0], q(2, 3));
    EXPECT_EQ(t1[0][1], 0);
    EXPECT_EQ(t1[1][0], q(2, 9));
    EXPECT_EQ(t1[1][1], q(1, 9));
}

TEST(ThreeBox, JointDistributionMatchesHandExpansion) {
    const auto s = three_box_scenario();
    for (int k = 1; k <= 3; ++k) {
        const auto expected = oracle::three_box_column(k);
        const auto t = joint_distribution(s, k);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                EXPECT_EQ(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          q(expected.ninths[static_cast<std::size_t>(2 * i + j)], 9))
                    << "k=" << k << " i=" << i << " j=" << j;
            }
        }
    }
}

TEST(ThreeBox, AblConditionals) {
    const auto s = three_box_scenario();
    EXPECT_EQ(abl_conditional(s, 1, 1), 1);
    EXPECT_EQ(abl_conditional(s, 2, 1), 1);
    EXPECT_EQ(abl_conditional(s, 3, 1), q(1, 5));
    EXPECT_EQ(abl_conditional(s, 1, 0), 0);
}

TEST(ThreeBox, PostselectionSuccess) {
    const auto s = three_box_scenario();
    EXPECT_EQ(postselection_success(s, 1), q(1, 9));
    EXPECT_EQ(postselection_success(s, 2), q(1, 9));
    EXPECT_EQ(postselection_success(s, 3), q(5, 9));
    EXPECT_EQ(postselection_success_without_intermediate(s), q(1, 9));
}

TEST(ThreeBox, BoxesOneAndTwoAreSymmetric) {
    const auto s = three_box_scenario();
    EXPECT_EQ(joint_distribution(s, 1), joint_distribution(s, 2));
}

TEST(Pps, InvalidChoiceIsRejected) {
    const auto s = three_box_scenario();
    EXPECT_THROW(joint_distribution(s, 4), ContractViolation);
    EXPECT_THROW(postselection_success(s, 0), ContractViolation);
}

TEST(Pps, AblWithImpossiblePostselectionIsAnError) {
    // Post-select on |2> after preparing |1> and checking box 1.
    using hilbert::Projector;
    using hilbert::Pvm;
    using hilbert::StateVector;
    PpsScenario s(hilbert::outer_product(StateVector::basis(3, 0)),
                  {{1, Pvm::binary(Projector::onto(StateVector::basis(3, 0)))}},
                  Pvm::binary(Projector::onto(StateVector::basis(3, 1))));
    EXPECT_EQ(postselection_success(s, 1), 0);
    EXPECT_THROW(abl_conditional(s, 1, 1), UndefinedConditional);
}

TEST(Pps, ScenarioRejectsMismatchedDimensions) {
    using hilbert::Projector;
    using hilbert::Pvm;
    using hilbert::StateVector;
    EXPECT_THROW(PpsScenario(hilbert::outer_product(StateVector::basis(3, 0)),
                             {{1, Pvm::binary(Projector::onto(StateVector::basis(2, 0)))}},
                             Pvm::binary(Projector::onto(StateVector::basis(3, 1)))),
                 DimensionError);
}

// Random scenarios over small Gaussian-integer states.
hilbert::StateVector random_state(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> draw(-2, 2);
    while (true) {
        std::vector<hilbert::Complex> amps;
        Rational norm(0);
        for (std::size_t i = 0; i < dim; ++i) {
            amps.emplace_back(Rational(draw(rng)), Rational(draw(rng)));
            norm += amps.back().norm_squared();
        }
        if (norm != 0) {
            return hilbert::StateVector(std::move(amps), 1 / norm);
        }
    }
}

TEST(PpsProperty, NormalizationAndBayesConsistency) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 3);
        std::map<int, hilbert::Pvm> checks;
        for (int k = 1; k <= 3; ++k) {
            checks.emplace(k, hilbert::Pvm::binary(hilbert::Projector::onto(random_state(rng, dim))));
        }
        const PpsScenario s(hilbert::outer_product(random_state(rng, dim)), std::move(checks),
                            hilbert::Pvm::binary(hilbert::Projector::onto(random_state(rng, dim))));
        for (int k = 1; k <= 3; ++k) {
            const auto t = joint_distribution(s, k);
            EXPECT_EQ(t[0][0] + t[0][1] + t[1][0] + t[1][1], 1);
            const auto success = postselection_success(s, k);
            if (success == 0) {
                EXPECT_THROW(abl_conditional(s, k, 1), UndefinedConditional);
                continue;
            }
            for (int i = 0; i < 2; ++i) {
                EXPECT_EQ(abl_conditional(s, k, i) * success, t[static_cast<std::size_t>(i)][1]);
            }
        }
    }
}

}  // namespace
}  // namespace threebox::pps
