#pragma once

// Deciding whether a behavior can be produced by some SCM on a given DAG.
//
// With finitely many observed values, any latent Lambda can be replaced by a
// distribution over deterministic response functions: one strategy fixes
// M1's response to C (pure setting) or the particle position V with
// M1 = δ(C,V) (realist setting), together with M2's response to whatever
// observed parents the variant gives it ({}, {M1}, {C} or {C, M1}). Conversely
// every mixture of strategies is an SCM with Lambda = strategy index. The
// behavior is compatible with the DAG iff it is a convex mixture of strategy
// behaviors, which is an exact LP feasibility question.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threebox/behavior.hpp"
#include "threebox/dag.hpp"
#include "threebox/inequality.hpp"
#include "threebox/simplex.hpp"

namespace threebox::feasibility {

enum class M2Inputs { none, outcome, choice, choice_and_outcome };

M2Inputs m2_inputs(const dag::DagVariant& variant);

struct Strategy {
    std::optional<int> position;   // realist: V
    std::vector<int> m1_response;  // pure: M1 per choice (choice order)
    std::vector<int> m2_response;  // M2 per input combination

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Realist positions range over the three boxes.
inline constexpr int kPositions = 3;

class StrategySpace {
public:
    StrategySpace(dag::DagVariant variant, std::vector<int> choices);

    const dag::DagVariant& variant() const { return variant_; }
    const std::vector<int>& choices() const { return choices_; }
    const std::vector<Strategy>& strategies() const { return strategies_; }
    std::size_t size() const { return strategies_.size(); }

    /// (M1, M2) produced by `strategy` when C = choices()[choice_index].
    std::pair<int, int> outcome(std::size_t strategy, std::size_t choice_index) const;

    std::string describe(std::size_t strategy) const;

private:
    dag::DagVariant variant_;
    std::vector<int> choices_;
    std::vector<Strategy> strategies_;
};

/// Lexicographic enumeration: M1 part (or V) outermost, M2 table innermost,
/// binary tables read with the first input combination as the low bit.
StrategySpace enumerate_strategies(const dag::DagVariant& variant, const std::vector<int>& choices);

struct WeightedStrategy {
    std::size_t index;
    Rational weight;

    friend bool operator==(const WeightedStrategy&, const WeightedStrategy&) = default;
};

/// Mixture behavior of the weighted strategies.
Behavior reconstruct(const StrategySpace& space, const std::vector<WeightedStrategy>& mixture);

struct FeasibilityResult {
    dag::DagVariant variant;
    std::vector<int> choices;
    std::size_t strategy_count = 0;
    bool feasible = false;
    /// Nonzero weights of a basic feasible mixture, in strategy order.
    std::vector<WeightedStrategy> certificate;
    std::vector<std::string> certificate_labels;
    /// Farkas vector over the LP rows (normalization, then C-major cells).
    std::vector<Rational> farkas;
    /// Human-readable reasons, when one applies.
    std::optional<inequality::Entry> inequality_witness;
    std::optional<std::pair<int, int>> signalling_witness;
};

/// Constraint system of the decision: columns are strategies, row 0 is
/// normalization and row 1 + 4*c + 2*i + j matches P(i, j | choices[c]).
struct LinearSystem {
    lp::DenseMatrix matrix;
    std::vector<Rational> rhs;
};
LinearSystem build_system(const StrategySpace& space, const Behavior& b);

/// Exact decision over b's own choice set. A feasible result's certificate
/// reconstructs b exactly and an infeasible result carries a verified Farkas
/// vector; either is checked before returning.
FeasibilityResult decide(const Behavior& b, const dag::DagVariant& variant);

struct Figure4Cell {
    dag::DagVariant variant;
    std::vector<int> scope;
    FeasibilityResult result;
    /// Feasible, and no variant with a strict subset of its arrows (same
    /// setting) is feasible on this scope.
    bool minimal = false;
};

struct Figure4Report {
    std::vector<std::vector<int>> scopes;
    std::vector<Figure4Cell> cells;  // variant-major, all_variants() order

    const Figure4Cell& cell(const dag::DagVariant& variant, const std::vector<int>& scope) const;
};

/// All eight variants on each scope. Cells are solved concurrently and
/// merged in a fixed order.
Figure4Report figure4_report(const Behavior& b, std::vector<std::vector<int>> scopes = {{1, 2}, {1, 2, 3}});

std::string to_json(const FeasibilityResult& r);
std::string to_markdown(const FeasibilityResult& r);
std::string to_json(const Figure4Report& r);
std::string to_markdown(const Figure4Report& r);

}  // namespace threebox::feasibility
