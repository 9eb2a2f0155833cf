#include "threebox/scm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "threebox/error.hpp"

namespace threebox::scm {

// ---------------------------------------------------------------- Expr

struct Expr::Node {
    enum class Kind { var, constant, delta, one_minus, product, sum, by_choice } kind;
    std::string name;
    int value = 0;
    std::vector<Expr> operands;
    std::map<int, Expr> branches;
};

Expr Expr::var(std::string name) {
    return Expr(std::make_shared<const Node>(Node{Node::Kind::var, std::move(name), 0, {}, {}}));
}

Expr Expr::constant(int value) { return Expr(std::make_shared<const Node>(Node{Node::Kind::constant, {}, value, {}, {}})); }

Expr Expr::by_choice(std::map<int, Expr> branches) {
    return Expr(std::make_shared<const Node>(Node{Node::Kind::by_choice, {}, 0, {}, std::move(branches)}));
}

Expr delta(Expr a, Expr b) {
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Node::Kind::delta, {}, 0, {std::move(a), std::move(b)}, {}}));
}

Expr one_minus(Expr x) {
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Node::Kind::one_minus, {}, 0, {std::move(x)}, {}}));
}

Expr operator*(Expr a, Expr b) {
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Node::Kind::product, {}, 0, {std::move(a), std::move(b)}, {}}));
}

Expr operator+(Expr a, Expr b) {
    return Expr(
        std::make_shared<const Expr::Node>(Expr::Node{Expr::Node::Kind::sum, {}, 0, {std::move(a), std::move(b)}, {}}));
}

int Expr::eval(const std::map<std::string, int>& env) const {
    using Kind = Node::Kind;
    const auto& n = *node_;
    switch (n.kind) {
        case Kind::var: {
            const auto it = env.find(n.name);
            if (it == env.end()) {
                throw ContractViolation("unbound variable '" + n.name + "' in structural equation");
            }
            return it->second;
        }
        case Kind::constant:
            return n.value;
        case Kind::delta:
            return n.operands[0].eval(env) == n.operands[1].eval(env) ? 1 : 0;
        case Kind::one_minus:
            return 1 - n.operands[0].eval(env);
        case Kind::product:
            return n.operands[0].eval(env) * n.operands[1].eval(env);
        case Kind::sum:
            return n.operands[0].eval(env) + n.operands[1].eval(env);
        case Kind::by_choice: {
            const auto c = env.find(std::string(dag::kChoice));
            if (c == env.end()) {
                throw ContractViolation("per-choice branch needs C as an input");
            }
            const auto branch = n.branches.find(c->second);
            if (branch == n.branches.end()) {
                throw ContractViolation("no branch for C=" + std::to_string(c->second));
            }
            return branch->second.eval(env);
        }
    }
    return 0;
}

std::set<std::string> Expr::variables() const {
    std::set<std::string> out;
    const auto& n = *node_;
    if (n.kind == Node::Kind::var) {
        out.insert(n.name);
    }
    if (n.kind == Node::Kind::by_choice) {
        out.insert(std::string(dag::kChoice));
    }
    for (const auto& op : n.operands) {
        out.merge(op.variables());
    }
    for (const auto& [k, e] : n.branches) {
        out.merge(e.variables());
    }
    return out;
}

std::string Expr::render() const {
    using Kind = Node::Kind;
    const auto& n = *node_;
    switch (n.kind) {
        case Kind::var:
            return dag::display_name(n.name);
        case Kind::constant:
            return std::to_string(n.value);
        case Kind::delta:
            return "δ(" + n.operands[0].render() + "," + n.operands[1].render() + ")";
        case Kind::one_minus:
            return "(1−" + n.operands[0].render() + ")";
        case Kind::product:
            return n.operands[0].render() + "·" + n.operands[1].render();
        case Kind::sum:
            return "(" + n.operands[0].render() + "+" + n.operands[1].render() + ")";
        case Kind::by_choice: {
            std::string out = "{";
            bool first = true;
            for (const auto& [k, e] : n.branches) {
                out += (first ? "" : "; ") + std::string("C=") + std::to_string(k) + ": " + e.render();
                first = false;
            }
            return out + "}";
        }
    }
    return {};
}

// ------------------------------------------------------ variables, tables

ExogenousVar bernoulli(std::string name, const Rational& p) { return {std::move(name), {0, 1}, {1 - p, p}}; }

ExogenousVar uniform(std::string name, int lo, int hi) {
    ExogenousVar v{std::move(name), {}, {}};
    for (int x = lo; x <= hi; ++x) {
        v.support.push_back(x);
        v.weights.push_back(make_rational(1, hi - lo + 1));
    }
    return v;
}

namespace {

// Odometer over the product of `supports`; the first coordinate varies slowest.
void for_each_assignment(const std::vector<const std::vector<int>*>& supports,
                         const std::function<void(const std::vector<int>&)>& visit) {
    for (const auto* s : supports) {
        if (s->empty()) {
            return;
        }
    }
    std::vector<std::size_t> index(supports.size(), 0);
    std::vector<int> values(supports.size());
    while (true) {
        for (std::size_t d = 0; d < supports.size(); ++d) {
            values[d] = (*supports[d])[index[d]];
        }
        visit(values);
        std::size_t d = supports.size();
        while (d > 0) {
            --d;
            if (++index[d] < supports[d]->size()) {
                break;
            }
            index[d] = 0;
            if (d == 0) {
                return;
            }
        }
        if (supports.empty()) {
            return;
        }
    }
}

bool contains(const std::vector<int>& support, int value) {
    return std::find(support.begin(), support.end(), value) != support.end();
}

}  // namespace

StructuralEquation::StructuralEquation(std::string target, std::vector<std::string> inputs,
                                       std::map<std::vector<int>, int> table, std::string formula)
    : target_(std::move(target)), inputs_(std::move(inputs)), table_(std::move(table)), formula_(std::move(formula)) {
    for (const auto& [key, value] : table_) {
        if (key.size() != inputs_.size()) {
            throw ContractViolation("equation for " + target_ + " has a table row of the wrong arity");
        }
    }
}

StructuralEquation StructuralEquation::compile(std::string target, std::vector<std::string> inputs, const Expr& expr,
                                               const std::map<std::string, std::vector<int>>& supports,
                                               const std::vector<int>& target_support) {
    for (const auto& v : expr.variables()) {
        if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) {
            throw ContractViolation("equation for " + target + " uses '" + v + "' which is not a declared input");
        }
    }
    std::vector<const std::vector<int>*> input_supports;
    for (const auto& in : inputs) {
        const auto it = supports.find(in);
        if (it == supports.end()) {
            throw ContractViolation("no support known for input '" + in + "' of " + target);
        }
        input_supports.push_back(&it->second);
    }
    std::map<std::vector<int>, int> table;
    for_each_assignment(input_supports, [&](const std::vector<int>& values) {
        std::map<std::string, int> env;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            env[inputs[i]] = values[i];
        }
        const int out = expr.eval(env);
        if (!contains(target_support, out)) {
            throw ContractViolation("equation for " + target + " produces " + std::to_string(out) +
                                    " outside the target's support");
        }
        table.emplace(values, out);
    });
    return StructuralEquation(std::move(target), std::move(inputs), std::move(table), expr.render());
}

int StructuralEquation::evaluate(const std::vector<int>& input_values) const {
    const auto it = table_.find(input_values);
    if (it == table_.end()) {
        throw ContractViolation("equation for " + target_ + " is not defined on this input");
    }
    return it->second;
}

int StructuralEquation::evaluate(const std::map<std::string, int>& env) const {
    std::vector<int> values;
    values.reserve(inputs_.size());
    for (const auto& in : inputs_) {
        const auto it = env.find(in);
        if (it == env.end()) {
            throw ContractViolation("input '" + in + "' of " + target_ + " is unassigned");
        }
        values.push_back(it->second);
    }
    return evaluate(values);
}

// ------------------------------------------------------------------- Scm

Scm::Scm(dag::DagVariant variant, std::vector<ExogenousVar> exogenous, std::vector<EndogenousVar> endogenous,
         std::vector<StructuralEquation> equations, std::vector<int> choice_support)
    : variant_(variant),
      dag_(dag::build(variant)),
      exogenous_(std::move(exogenous)),
      endogenous_(std::move(endogenous)),
      choice_support_(std::move(choice_support)) {
    const std::string choice(dag::kChoice);
    const auto add_support = [&](const std::string& name, const std::vector<int>& support) {
        if (support.empty()) {
            throw ContractViolation("variable " + name + " has an empty support");
        }
        std::set<int> unique(support.begin(), support.end());
        if (unique.size() != support.size()) {
            throw ContractViolation("variable " + name + " has repeated support values");
        }
        if (!supports_.emplace(name, support).second) {
            throw ContractViolation("variable " + name + " declared twice");
        }
    };
    add_support(choice, choice_support_);

    for (const auto& x : exogenous_) {
        add_support(x.name, x.support);
        if (x.weights.size() != x.support.size()) {
            throw ContractViolation("exogenous " + x.name + " needs one weight per support value");
        }
        Rational total(0);
        for (const auto& w : x.weights) {
            if (w < 0) {
                throw ContractViolation("exogenous " + x.name + " has a negative weight");
            }
            total += w;
        }
        if (total != 1) {
            throw ContractViolation("weights of exogenous " + x.name + " sum to " + to_fraction_string(total));
        }
    }
    for (const auto& e : endogenous_) {
        add_support(e.name, e.support);
        if (!dag_.has_node(e.name)) {
            throw ContractViolation("endogenous " + e.name + " is not a node of the " + variant_.shorthand() + " DAG");
        }
        if (dag_.parents(e.name).empty()) {
            throw ContractViolation("root node " + e.name + " must be exogenous");
        }
    }
    for (const auto name : {dag::kFirstOutcome, dag::kSecondOutcome}) {
        const auto it = supports_.find(name);
        if (it == supports_.end() || it->second != std::vector<int>{0, 1}) {
            throw ContractViolation(std::string(name) + " must be endogenous with support {0, 1}");
        }
    }

    // Private noise: exogenous variables outside the DAG, each feeding at most
    // one equation so the DAG stays a faithful picture of shared causes.
    std::map<std::string, int> noise_uses;
    for (const auto& x : exogenous_) {
        if (!dag_.has_node(x.name)) {
            noise_uses[x.name] = 0;
        } else if (!dag_.parents(x.name).empty()) {
            throw ContractViolation("exogenous " + x.name + " has parents in the DAG");
        }
    }

    std::map<std::string, StructuralEquation> by_target;
    for (auto& eq : equations) {
        if (is_exogenous(eq.target()) || eq.target() == choice || !supports_.contains(eq.target())) {
            throw ContractViolation("equation target " + eq.target() + " is not an endogenous variable");
        }
        const auto parents = dag_.parents(eq.target());
        std::vector<const std::vector<int>*> input_supports;
        for (const auto& in : eq.inputs()) {
            const bool is_parent = std::find(parents.begin(), parents.end(), in) != parents.end();
            const auto noise = noise_uses.find(in);
            if (!is_parent && noise == noise_uses.end()) {
                throw ContractViolation("equation for " + eq.target() + " reads " + in +
                                        ", which is neither a DAG parent nor private noise");
            }
            if (noise != noise_uses.end() && ++noise->second > 1) {
                throw ContractViolation("noise " + in + " feeds more than one equation");
            }
            input_supports.push_back(&support_of(in));
        }
        std::size_t expected_rows = 0;
        const auto& target_support = support_of(eq.target());
        for_each_assignment(input_supports, [&](const std::vector<int>& values) {
            ++expected_rows;
            if (!contains(target_support, eq.evaluate(values))) {
                throw ContractViolation("equation for " + eq.target() + " leaves the target's support");
            }
        });
        if (expected_rows != eq.table().size()) {
            throw ContractViolation("equation table for " + eq.target() + " is not defined on exactly the input space");
        }
        if (by_target.contains(eq.target())) {
            throw ContractViolation("two equations for " + eq.target());
        }
        auto target = eq.target();
        by_target.emplace(std::move(target), std::move(eq));
    }

    for (const auto& name : dag_.topological_order()) {
        if (name == choice) {
            continue;
        }
        if (dag_.parents(name).empty()) {
            if (!is_exogenous(name)) {
                throw ContractViolation("root node " + name + " needs an exogenous distribution");
            }
            continue;
        }
        auto it = by_target.find(name);
        if (it == by_target.end()) {
            throw ContractViolation("node " + name + " has no structural equation");
        }
        equations_.push_back(std::move(it->second));
        by_target.erase(it);
    }
}

const StructuralEquation& Scm::equation(std::string_view target) const {
    for (const auto& eq : equations_) {
        if (eq.target() == target) {
            return eq;
        }
    }
    throw ContractViolation("no equation for " + std::string(target));
}

const std::vector<int>& Scm::support_of(std::string_view name) const {
    const auto it = supports_.find(name);
    if (it == supports_.end()) {
        throw UnknownNode("unknown variable '" + std::string(name) + "'");
    }
    return it->second;
}

bool Scm::is_exogenous(std::string_view name) const {
    return std::any_of(exogenous_.begin(), exogenous_.end(), [&](const ExogenousVar& x) { return x.name == name; });
}

// ------------------------------------------------------------ enumeration

namespace {

void check_choices(const Scm& m, const std::vector<int>& choices) {
    if (choices.empty()) {
        throw ContractViolation("need at least one choice");
    }
    for (int k : choices) {
        if (!contains(m.choice_support(), k)) {
            throw ContractViolation("C=" + std::to_string(k) + " is outside the model's choice support");
        }
    }
}

// Calls visit(env, weight) for every exogenous assignment with C = k, after
// evaluating all equations.
void enumerate_worlds(const Scm& m, int k,
                      const std::function<void(const std::map<std::string, int>&, const Rational&)>& visit) {
    std::vector<const std::vector<int>*> supports;
    for (const auto& x : m.exogenous()) {
        supports.push_back(&x.support);
    }
    for_each_assignment(supports, [&](const std::vector<int>& values) {
        std::map<std::string, int> env{{std::string(dag::kChoice), k}};
        Rational weight(1);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto& x = m.exogenous()[i];
            env[x.name] = values[i];
            const auto pos = static_cast<std::size_t>(std::find(x.support.begin(), x.support.end(), values[i]) -
                                                      x.support.begin());
            weight *= x.weights[pos];
        }
        for (const auto& eq : m.equations()) {
            env[eq.target()] = eq.evaluate(env);
        }
        visit(env, weight);
    });
}

}  // namespace

Behavior induced_behavior(const Scm& m, const std::vector<int>& choices) {
    check_choices(m, choices);
    const std::string m1(dag::kFirstOutcome), m2(dag::kSecondOutcome);
    std::map<int, Column> columns;
    for (int k : choices) {
        Column col;
        for (auto& cell : col) {
            cell = 0;
        }
        enumerate_worlds(m, k, [&](const std::map<std::string, int>& env, const Rational& w) {
            col[cell_index(env.at(m1), env.at(m2))] += w;
        });
        columns.emplace(k, std::move(col));
    }
    return Behavior(std::move(columns));
}

Behavior markov_behavior(const Scm& m, const std::vector<int>& choices) {
    check_choices(m, choices);
    const auto factorization = dag::markov_factorization(m.dag());

    // P(node = value | parents as in env), marginalizing the node's private noise.
    const auto conditional = [&](const std::string& node, const std::map<std::string, int>& env) {
        if (m.is_exogenous(node)) {
            const auto& x = *std::find_if(m.exogenous().begin(), m.exogenous().end(),
                                          [&](const ExogenousVar& v) { return v.name == node; });
            const auto pos = static_cast<std::size_t>(
                std::find(x.support.begin(), x.support.end(), env.at(node)) - x.support.begin());
            return pos < x.weights.size() ? x.weights[pos] : Rational(0);
        }
        const auto& eq = m.equation(node);
        std::vector<const ExogenousVar*> noise;
        for (const auto& in : eq.inputs()) {
            if (!m.dag().has_node(in)) {
                noise.push_back(&*std::find_if(m.exogenous().begin(), m.exogenous().end(),
                                               [&](const ExogenousVar& v) { return v.name == in; }));
            }
        }
        std::vector<const std::vector<int>*> supports;
        for (const auto* x : noise) {
            supports.push_back(&x->support);
        }
        Rational p(0);
        auto local = env;
        for_each_assignment(supports, [&](const std::vector<int>& values) {
            Rational w(1);
            for (std::size_t i = 0; i < noise.size(); ++i) {
                local[noise[i]->name] = values[i];
                const auto& s = noise[i]->support;
                w *= noise[i]->weights[static_cast<std::size_t>(std::find(s.begin(), s.end(), values[i]) - s.begin())];
            }
            if (eq.evaluate(local) == env.at(node)) {
                p += w;
            }
        });
        return p;
    };

    std::vector<const std::vector<int>*> latent_supports;
    for (const auto& name : factorization.summed) {
        latent_supports.push_back(&m.support_of(name));
    }

    std::map<int, Column> columns;
    for (int k : choices) {
        Column col;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Rational total(0);
                for_each_assignment(latent_supports, [&](const std::vector<int>& values) {
                    std::map<std::string, int> env{{std::string(dag::kChoice), k},
                                                   {std::string(dag::kFirstOutcome), i},
                                                   {std::string(dag::kSecondOutcome), j}};
                    for (std::size_t n = 0; n < values.size(); ++n) {
                        env[factorization.summed[n]] = values[n];
                    }
                    Rational product(1);
                    for (const auto& f : factorization.factors) {
                        product *= conditional(f.node, env);
                        if (product == 0) {
                            break;
                        }
                    }
                    total += product;
                });
                col[cell_index(i, j)] = total;
            }
        }
        columns.emplace(k, std::move(col));
    }
    return Behavior(std::move(columns));
}

JointDistribution full_joint(const Scm& m, const std::vector<int>& choices) {
    check_choices(m, choices);
    JointDistribution out;
    for (const auto& n : m.dag().nodes()) {
        out.variables.push_back(n.name);
    }
    const Rational choice_weight = make_rational(1, static_cast<long>(choices.size()));
    for (int k : choices) {
        enumerate_worlds(m, k, [&](const std::map<std::string, int>& env, const Rational& w) {
            std::vector<int> key;
            for (const auto& v : out.variables) {
                key.push_back(env.at(v));
            }
            out.probability[key] += choice_weight * w;
        });
    }
    return out;
}

Rational postselected_conditional(const Scm& m, int choice, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw ContractViolation("outcome must be 0 or 1");
    }
    const auto b = induced_behavior(m, {choice});
    const Rational success = m2_marginal(b, choice);
    if (success == 0) {
        throw UndefinedConditional("post-selection never succeeds for C=" + std::to_string(choice));
    }
    return b.at(outcome, 1, choice) / success;
}

// ---------------------------------------------------------------- catalog

CatalogCase parse_case(std::string_view text) {
    if (text == "a") return CatalogCase::a;
    if (text == "b1") return CatalogCase::b1;
    if (text == "c") return CatalogCase::c;
    if (text == "d") return CatalogCase::d;
    throw ParseError("unknown catalog case '" + std::string(text) + "' (expected a|b1|c|d)");
}

std::string case_name(CatalogCase c) {
    switch (c) {
        case CatalogCase::a: return "a";
        case CatalogCase::b1: return "b1";
        case CatalogCase::c: return "c";
        case CatalogCase::d: return "d";
    }
    return {};
}

Scm catalog(CatalogCase which) {
    const std::string c(dag::kChoice), m1(dag::kFirstOutcome), m2(dag::kSecondOutcome), lambda(dag::kHidden),
        v(dag::kPosition), noise("N");
    const auto third = make_rational(1, 3);
    const std::vector<int> binary{0, 1}, boxes{1, 2, 3};

    const auto C = Expr::var(c), M1 = Expr::var(m1), L = Expr::var(lambda), V = Expr::var(v), N = Expr::var(noise);

    // M2 for cases c and d: deterministic copy of the hit for C=1,2, flipped
    // noise on a miss for C=3.
    const auto hit = delta(C, L);
    const auto piecewise_m2 =
        Expr::by_choice({{1, hit * N}, {2, hit * N}, {3, one_minus(hit) * one_minus(N) + hit * N}});

    std::vector<ExogenousVar> exogenous;
    std::vector<EndogenousVar> endogenous{{m1, binary}, {m2, binary}};
    dag::DagVariant variant;
    struct Spec {
        std::string target;
        std::vector<std::string> inputs;
        Expr expr;
    };
    std::vector<Spec> specs;

    switch (which) {
        case CatalogCase::a:
            variant = dag::DagVariant::parse("pure");
            exogenous = {bernoulli(lambda, third), bernoulli(noise, third)};
            specs = {{m1, {c, lambda}, L}, {m2, {lambda, noise}, L * N}};
            break;
        case CatalogCase::b1:
            variant = dag::DagVariant::parse("realist+o");
            exogenous = {uniform(lambda, 1, 3), bernoulli(noise, third)};
            endogenous.push_back({v, boxes});
            // M2 is declared over (M1, Lambda) but only reads M1 and the noise.
            specs = {{v, {lambda}, L}, {m1, {c, v}, delta(C, V)}, {m2, {m1, lambda, noise}, M1 * N}};
            break;
        case CatalogCase::c:
            variant = dag::DagVariant::parse("pure+p");
            exogenous = {uniform(lambda, 1, 3), bernoulli(noise, third)};
            specs = {{m1, {c, lambda}, hit}, {m2, {c, lambda, noise}, piecewise_m2}};
            break;
        case CatalogCase::d:
            variant = dag::DagVariant::parse("realist+p");
            exogenous = {uniform(lambda, 1, 3), bernoulli(noise, third)};
            endogenous.push_back({v, boxes});
            specs = {{v, {lambda}, L}, {m1, {c, v}, delta(C, V)}, {m2, {c, lambda, noise}, piecewise_m2}};
            break;
    }

    std::map<std::string, std::vector<int>> supports{{c, boxes}};
    for (const auto& x : exogenous) {
        supports[x.name] = x.support;
    }
    for (const auto& e : endogenous) {
        supports[e.name] = e.support;
    }
    std::vector<StructuralEquation> equations;
    for (auto& s : specs) {
        equations.push_back(StructuralEquation::compile(s.target, s.inputs, s.expr, supports, supports.at(s.target)));
    }
    return Scm(variant, std::move(exogenous), std::move(endogenous), std::move(equations), boxes);
}

// ------------------------------------------------------------------- JSON

std::string to_json(const Scm& m) {
    nlohmann::ordered_json doc;
    doc["variant"] = m.variant().shorthand();
    doc["choice_support"] = m.choice_support();
    doc["exogenous"] = nlohmann::ordered_json::array();
    for (const auto& x : m.exogenous()) {
        std::vector<std::string> weights;
        for (const auto& w : x.weights) {
            weights.push_back(to_fraction_string(w));
        }
        doc["exogenous"].push_back({{"name", x.name}, {"support", x.support}, {"weights", weights}});
    }
    doc["endogenous"] = nlohmann::ordered_json::array();
    for (const auto& e : m.endogenous()) {
        doc["endogenous"].push_back({{"name", e.name}, {"support", e.support}});
    }
    doc["equations"] = nlohmann::ordered_json::array();
    for (const auto& eq : m.equations()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& [in, out] : eq.table()) {
            rows.push_back({{"in", in}, {"out", out}});
        }
        nlohmann::ordered_json entry{{"target", eq.target()}, {"inputs", eq.inputs()}};
        if (!eq.formula().empty()) {
            entry["formula"] = eq.formula();
        }
        entry["table"] = std::move(rows);
        doc["equations"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

Scm scm_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto variant = dag::DagVariant::parse(doc.at("variant").get<std::string>());
        std::vector<int> choice_support{1, 2, 3};
        if (doc.contains("choice_support")) {
            choice_support = doc.at("choice_support").get<std::vector<int>>();
        }
        std::vector<ExogenousVar> exogenous;
        for (const auto& x : doc.at("exogenous")) {
            ExogenousVar var{x.at("name").get<std::string>(), x.at("support").get<std::vector<int>>(), {}};
            for (const auto& w : x.at("weights")) {
                var.weights.push_back(parse_rational(w.get<std::string>()));
            }
            exogenous.push_back(std::move(var));
        }
        std::vector<EndogenousVar> endogenous;
        for (const auto& e : doc.at("endogenous")) {
            endogenous.push_back({e.at("name").get<std::string>(), e.at("support").get<std::vector<int>>()});
        }
        std::vector<StructuralEquation> equations;
        for (const auto& eq : doc.at("equations")) {
            std::map<std::vector<int>, int> table;
            for (const auto& row : eq.at("table")) {
                if (!table.emplace(row.at("in").get<std::vector<int>>(), row.at("out").get<int>()).second) {
                    throw ParseError("duplicate table row in equation for " + eq.at("target").get<std::string>());
                }
            }
            equations.emplace_back(eq.at("target").get<std::string>(), eq.at("inputs").get<std::vector<std::string>>(),
                                   std::move(table), eq.value("formula", std::string{}));
        }
        return Scm(variant, std::move(exogenous), std::move(endogenous), std::move(equations), std::move(choice_support));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("SCM JSON: ") + e.what());
    }
}

}  // namespace threebox::scm
