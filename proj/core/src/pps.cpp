#include "threebox/pps.hpp"

#include <string>

#include "threebox/error.hpp"

namespace threebox::pps {

using hilbert::Complex;
using hilbert::Projector;
using hilbert::Pvm;
using hilbert::StateVector;

PpsScenario::PpsScenario(hilbert::DensityOperator pre_state, std::map<int, hilbert::Pvm> intermediate,
                         hilbert::Pvm final_measurement)
    : pre_state_(std::move(pre_state)), intermediate_(std::move(intermediate)), final_(std::move(final_measurement)) {
    if (intermediate_.empty()) {
        throw ContractViolation("scenario needs at least one intermediate measurement");
    }
    const auto check = [&](const Pvm& pvm, const std::string& what) {
        if (pvm.size() != 2) {
            throw ContractViolation(what + " must have exactly two outcomes");
        }
        if (pvm.dim() != pre_state_.dim()) {
            throw DimensionError(what + " dimension differs from the pre-selected state");
        }
    };
    for (const auto& [k, pvm] : intermediate_) {
        check(pvm, "intermediate PVM for C=" + std::to_string(k));
    }
    check(final_, "post-selection PVM");
}

const hilbert::Pvm& PpsScenario::intermediate(int choice) const {
    const auto it = intermediate_.find(choice);
    if (it == intermediate_.end()) {
        throw ContractViolation("invalid choice C=" + std::to_string(choice));
    }
    return it->second;
}

std::vector<int> PpsScenario::choices() const {
    std::vector<int> out;
    for (const auto& [k, pvm] : intermediate_) {
        out.push_back(k);
    }
    return out;
}

StateVector three_box_pre_state() { return StateVector({Complex(1), Complex(1), Complex(1)}, make_rational(1, 3)); }

StateVector three_box_post_state() { return StateVector({Complex(1), Complex(1), Complex(-1)}, make_rational(1, 3)); }

PpsScenario three_box_scenario() {
    std::map<int, Pvm> checks;
    for (int box = 1; box <= 3; ++box) {
        checks.emplace(box, Pvm::binary(Projector::onto(StateVector::basis(3, static_cast<std::size_t>(box - 1)))));
    }
    return PpsScenario(hilbert::outer_product(three_box_pre_state()), std::move(checks),
                       Pvm::binary(Projector::onto(three_box_post_state())));
}

JointTable joint_distribution(const PpsScenario& s, int choice) {
    const auto& pvm = s.intermediate(choice);
    JointTable table;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto updated = hilbert::apply_projector(pvm[i], s.pre_state());
        for (std::size_t j = 0; j < 2; ++j) {
            table[i][j] = hilbert::trace_product(s.final_measurement()[j], updated.state);
        }
    }
    return table;
}

Behavior joint_behavior(const PpsScenario& s, std::vector<int> choices) {
    if (choices.empty()) {
        choices = s.choices();
    }
    std::map<int, Column> columns;
    for (int k : choices) {
        const auto t = joint_distribution(s, k);
        columns.emplace(k, Column{t[0][0], t[0][1], t[1][0], t[1][1]});
    }
    return Behavior(std::move(columns));
}

Rational postselection_success(const PpsScenario& s, int choice) {
    const auto t = joint_distribution(s, choice);
    return t[0][1] + t[1][1];
}

Rational postselection_success_without_intermediate(const PpsScenario& s) {
    return hilbert::trace_product(s.final_measurement()[1], s.pre_state());
}

Rational abl_conditional(const PpsScenario& s, int choice, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw ContractViolation("outcome must be 0 or 1");
    }
    const auto t = joint_distribution(s, choice);
    const Rational denominator = t[0][1] + t[1][1];
    if (denominator == 0) {
        throw UndefinedConditional("post-selection never succeeds for C=" + std::to_string(choice));
    }
    return t[static_cast<std::size_t>(outcome)][1] / denominator;
}

}  // namespace threebox::pps
