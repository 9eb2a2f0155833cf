#include <gtest/gtest.h>

#include <random>

#include "threebox/error.hpp"
#include "threebox/hilbert.hpp"
#include "threebox/pps.hpp"

namespace threebox::hilbert {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(Hilbert, OuterProductOfBasisStateIsDiagonalUnit) {
    const auto rho = outer_product(StateVector::basis(3, 0));
    Matrix expected(3);
    expected(0, 0) = Complex(1);
    EXPECT_EQ(rho.matrix(), expected);
}

TEST(Hilbert, OuterProductOfUniformSuperpositionHasAllEntriesOneThird) {
    const auto rho = outer_product(pps::three_box_pre_state());
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_EQ(rho.matrix()(r, c), Complex(q(1, 3))) << r << "," << c;
        }
    }
}

TEST(Hilbert, OuterProductOfPostStateHasNegativeEntriesExactlyWhereOneIndexIsThree) {
    const auto rho = outer_product(pps::three_box_post_state());
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const bool one_is_three = (r == 2) != (c == 2);
            EXPECT_EQ(rho.matrix()(r, c), Complex(one_is_three ? q(-1, 3) : q(1, 3))) << r << "," << c;
        }
    }
}

TEST(Hilbert, OuterProductRejectsUnnormalizedState) {
    StateVector v({Complex(1), Complex(1), Complex(1)});
    EXPECT_THROW(outer_product(v), NormalizationError);
}

TEST(Hilbert, ProjectorOntoBoxOneHasWeightOneThirdOnPreState) {
    const auto rho = outer_product(pps::three_box_pre_state());
    const auto result = apply_projector(Projector::onto(StateVector::basis(3, 0)), rho);
    EXPECT_EQ(result.weight, q(1, 3));
}

TEST(Hilbert, IdentityAndZeroProjectors) {
    const auto rho = outer_product(pps::three_box_pre_state());
    const auto same = apply_projector(Projector::identity(3), rho);
    EXPECT_EQ(same.state, rho.matrix());
    EXPECT_EQ(same.weight, 1);
    EXPECT_EQ(apply_projector(Projector::zero(3), rho).weight, 0);
}

TEST(Hilbert, ApplyProjectorRejectsDimensionMismatch) {
    EXPECT_THROW(apply_projector(Projector::identity(2), outer_product(pps::three_box_pre_state())), DimensionError);
}

TEST(Hilbert, TraceProductReproducesAblNumerators) {
    const auto rho = outer_product(pps::three_box_pre_state());
    const auto post = Projector::onto(pps::three_box_post_state());
    const auto box1 = Projector::onto(StateVector::basis(3, 0));
    EXPECT_EQ(trace_product(post, apply_projector(box1, rho).state), q(1, 9));
    EXPECT_EQ(trace_product(post, apply_projector(box1.complement(), rho).state), 0);
    EXPECT_EQ(trace_product(Projector::identity(3), rho), 1);
}

TEST(Hilbert, TraceProductRejectsNonRealTrace) {
    Matrix a(2);
    a(0, 0) = Complex(Rational(0), Rational(1));
    EXPECT_THROW(trace_product(Projector::identity(2), a), ContractViolation);
}

TEST(Hilbert, ProjectorConstructionChecksInvariants) {
    Matrix not_idempotent = Rational(2) * Matrix::identity(2);
    EXPECT_THROW(Projector{not_idempotent}, ContractViolation);
    Matrix not_hermitian(2);
    not_hermitian(0, 1) = Complex(1);
    EXPECT_THROW(Projector{not_hermitian}, ContractViolation);
}

TEST(Hilbert, PvmRejectsOverlappingOrIncompleteElements) {
    const auto p = Projector::onto(StateVector::basis(3, 0));
    EXPECT_THROW(Pvm({p, p}), ContractViolation);
    EXPECT_THROW(Pvm({p}), ContractViolation);
}

TEST(Hilbert, DimensionBound) {
    EXPECT_THROW(Matrix(kMaxDimension + 1), DimensionError);
    EXPECT_THROW(Matrix(0), DimensionError);
}

TEST(Hilbert, ComplexAmplitudesStayExact) {
    // (|0> + i|1>)/sqrt2
    StateVector v({Complex(1), Complex(Rational(0), Rational(1))}, q(1, 2));
    const auto rho = outer_product(v);
    EXPECT_EQ(rho.matrix()(0, 1), Complex(Rational(0), q(-1, 2)));
    EXPECT_EQ(rho.matrix()(1, 0), Complex(Rational(0), q(1, 2)));
    EXPECT_EQ(trace_product(Projector::onto(StateVector::basis(2, 1)), rho), q(1, 2));
}

// Random rank-one projectors from small Gaussian-integer vectors.
Projector random_rank_one(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> draw(-2, 2);
    while (true) {
        std::vector<Complex> amps;
        Rational norm(0);
        for (std::size_t i = 0; i < dim; ++i) {
            amps.emplace_back(Rational(draw(rng)), Rational(draw(rng)));
            norm += amps.back().norm_squared();
        }
        if (norm != 0) {
            return Projector::onto(StateVector(std::move(amps), 1 / norm));
        }
    }
}

TEST(HilbertProperty, BinaryPvmsAreCompleteOrthogonalAndPreserveProbability) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
        const auto pvm = Pvm::binary(random_rank_one(rng, dim));
        for (std::size_t a = 0; a < pvm.size(); ++a) {
            for (std::size_t b = 0; b < pvm.size(); ++b) {
                const auto product = pvm[a].matrix() * pvm[b].matrix();
                EXPECT_EQ(product, a == b ? pvm[a].matrix() : Matrix::zero(dim));
            }
        }
        const auto rho = DensityOperator(random_rank_one(rng, dim).matrix());
        Rational total(0);
        for (const auto& p : pvm.elements()) {
            const auto projected = apply_projector(p, rho);
            total += projected.weight;
            // Idempotence: Tr[P rho P] == Tr[P rho].
            EXPECT_EQ(projected.weight, trace_product(p, rho));
        }
        EXPECT_EQ(total, 1);
    }
}

}  // namespace
}  // namespace threebox::hilbert
