#pragma once

// Pre- and post-selection: prepare rho0, measure one of several binary PVMs
// (the "choice" C), then measure a binary post-selection PVM. Outcome 1 of
// the final PVM is the post-selection success.

#include <array>
#include <map>
#include <vector>

#include "threebox/behavior.hpp"
#include "threebox/hilbert.hpp"

namespace threebox::pps {

class PpsScenario {
public:
    /// All PVMs must be binary and share the dimension of `pre_state`.
    PpsScenario(hilbert::DensityOperator pre_state, std::map<int, hilbert::Pvm> intermediate,
                hilbert::Pvm final_measurement);

    const hilbert::DensityOperator& pre_state() const { return pre_state_; }
    const hilbert::Pvm& intermediate(int choice) const;
    const hilbert::Pvm& final_measurement() const { return final_; }
    std::vector<int> choices() const;

private:
    hilbert::DensityOperator pre_state_;
    std::map<int, hilbert::Pvm> intermediate_;
    hilbert::Pvm final_;
};

/// |phi> = (|1>+|2>+|3>)/sqrt3, |psi> = (|1>+|2>-|3>)/sqrt3, and for C = 1..3
/// the box check {1 - |C><C|, |C><C|}.
PpsScenario three_box_scenario();
hilbert::StateVector three_box_pre_state();
hilbert::StateVector three_box_post_state();

/// table[i][j] = Tr[Pi^post_j Pi^C_i rho0 Pi^C_i] for C = choice.
using JointTable = std::array<std::array<Rational, 2>, 2>;
JointTable joint_distribution(const PpsScenario& s, int choice);

/// Behavior over the requested choices (all of them when empty).
Behavior joint_behavior(const PpsScenario& s, std::vector<int> choices = {});

/// P(M2=1 | C=choice).
Rational postselection_success(const PpsScenario& s, int choice);

/// Tr[Pi^post rho0]: post-selection success without the intermediate step.
Rational postselection_success_without_intermediate(const PpsScenario& s);

/// ABL rule: P(M1=outcome | M2=1, C=choice). Throws UndefinedConditional
/// when post-selection never succeeds for this choice.
Rational abl_conditional(const PpsScenario& s, int choice, int outcome);

}  // namespace threebox::pps
