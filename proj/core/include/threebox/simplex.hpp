#pragma once

// Exact feasibility of { x >= 0 : A x = b } by the phase-one simplex method
// over rationals, with Bland's smallest-index rule for entering and leaving
// variables. Results are deterministic for a given column order.

#include <cstddef>
#include <vector>

#include "threebox/rational.hpp"

namespace threebox::lp {

using DenseMatrix = std::vector<std::vector<Rational>>;

struct FeasibilityOutcome {
    bool feasible = false;
    /// A basic feasible solution when feasible.
    std::vector<Rational> solution;
    /// When infeasible: y with y^T A <= 0 componentwise and y^T b > 0.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

/// Throws ContractViolation on ragged input or a rhs of the wrong length.
FeasibilityOutcome solve_feasibility(const DenseMatrix& a, const std::vector<Rational>& b);

/// Checks the Farkas alternative directly from A and b.
bool is_farkas_certificate(const DenseMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y);

}  // namespace threebox::lp
