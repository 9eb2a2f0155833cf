#pragma once

// Structural causal models over finite supports. Exogenous variables are
// jointly independent; every other non-choice node is a deterministic
// function of its DAG parents plus private noise. All distributions are
// obtained by exhaustive enumeration.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "threebox/behavior.hpp"
#include "threebox/dag.hpp"
#include "threebox/rational.hpp"

namespace threebox::scm {

/// Integer-valued expression built from variables, constants, Kronecker
/// delta, +, *, 1-x and a per-choice branch on C.
class Expr {
public:
    static Expr var(std::string name);
    static Expr constant(int value);
    /// Selects the branch for the current value of C.
    static Expr by_choice(std::map<int, Expr> branches);

    friend Expr delta(Expr a, Expr b);
    friend Expr one_minus(Expr x);
    friend Expr operator*(Expr a, Expr b);
    friend Expr operator+(Expr a, Expr b);

    /// Throws ContractViolation on an unbound variable or a missing branch.
    int eval(const std::map<std::string, int>& env) const;
    std::set<std::string> variables() const;
    std::string render() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct ExogenousVar {
    std::string name;
    std::vector<int> support;
    std::vector<Rational> weights;
};

/// Bernoulli(p) on {0, 1}.
ExogenousVar bernoulli(std::string name, const Rational& p);
/// Uniform on {lo, ..., hi}.
ExogenousVar uniform(std::string name, int lo, int hi);

struct EndogenousVar {
    std::string name;
    std::vector<int> support;
};

/// Lookup table target := f(inputs), defined on the whole input product space.
class StructuralEquation {
public:
    StructuralEquation(std::string target, std::vector<std::string> inputs, std::map<std::vector<int>, int> table,
                       std::string formula = {});

    /// Tabulates `expr` over the product of the input supports. Every input
    /// needs an entry in `supports`; values outside `target_support` throw.
    static StructuralEquation compile(std::string target, std::vector<std::string> inputs, const Expr& expr,
                                      const std::map<std::string, std::vector<int>>& supports,
                                      const std::vector<int>& target_support);

    const std::string& target() const { return target_; }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::map<std::vector<int>, int>& table() const { return table_; }
    const std::string& formula() const { return formula_; }

    int evaluate(const std::vector<int>& input_values) const;
    int evaluate(const std::map<std::string, int>& env) const;

private:
    std::string target_;
    std::vector<std::string> inputs_;
    std::map<std::vector<int>, int> table_;
    std::string formula_;
};

class Scm {
public:
    /// Validates supports, weights, DAG compliance of every equation input
    /// (parents of the target or private noise used by one equation only),
    /// and totality of every table.
    Scm(dag::DagVariant variant, std::vector<ExogenousVar> exogenous, std::vector<EndogenousVar> endogenous,
        std::vector<StructuralEquation> equations, std::vector<int> choice_support = {1, 2, 3});

    const dag::DagVariant& variant() const { return variant_; }
    const dag::CausalDag& dag() const { return dag_; }
    const std::vector<ExogenousVar>& exogenous() const { return exogenous_; }
    const std::vector<EndogenousVar>& endogenous() const { return endogenous_; }
    const std::vector<int>& choice_support() const { return choice_support_; }
    const StructuralEquation& equation(std::string_view target) const;
    /// Equations in evaluation (topological) order.
    const std::vector<StructuralEquation>& equations() const { return equations_; }

    const std::vector<int>& support_of(std::string_view name) const;
    bool is_exogenous(std::string_view name) const;

private:
    dag::DagVariant variant_;
    dag::CausalDag dag_;
    std::vector<ExogenousVar> exogenous_;
    std::vector<EndogenousVar> endogenous_;
    std::vector<StructuralEquation> equations_;
    std::vector<int> choice_support_;
    std::map<std::string, std::vector<int>, std::less<>> supports_;
};

/// P(M1, M2 | C=k) for every k in `choices`, by enumerating all exogenous
/// assignments.
Behavior induced_behavior(const Scm& m, const std::vector<int>& choices);

/// Same table computed through the DAG's Markov factorization: conditional
/// tables P(node | parents) are derived per equation, then multiplied and
/// summed over latent values.
Behavior markov_behavior(const Scm& m, const std::vector<int>& choices);

/// Distribution over all DAG nodes (declaration order) with C uniform on
/// `choices`. Used for conditional-independence checks.
struct JointDistribution {
    std::vector<std::string> variables;
    std::map<std::vector<int>, Rational> probability;
};
JointDistribution full_joint(const Scm& m, const std::vector<int>& choices);

/// P(M1=outcome | M2=1, C=choice). Throws UndefinedConditional when
/// P(M2=1 | C=choice) = 0.
Rational postselected_conditional(const Scm& m, int choice, int outcome);

enum class CatalogCase { a, b1, c, d };

CatalogCase parse_case(std::string_view text);
std::string case_name(CatalogCase c);

/// The explicit sufficiency constructions:
///   a  -> pure         Lambda~Ber(1/3), M1 := Lambda, M2 := Lambda*N
///   b1 -> realist+o    Lambda~Uni(1,3), V := Lambda, M1 := δ(C,V), M2 := M1*N
///   c  -> pure+p       Lambda~Uni(1,3), M1 := δ(C,Lambda), M2 piecewise in C
///   d  -> realist+p    case c with V := Lambda and M1 := δ(C,V)
/// N~Ber(1/3) throughout.
Scm catalog(CatalogCase which);

std::string to_json(const Scm& m);
Scm scm_from_json(std::string_view text);

}  // namespace threebox::scm
