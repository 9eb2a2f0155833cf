#pragma once

// Causal DAGs over the experiment's variables and d-separation queries.

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace threebox::dag {

inline constexpr std::string_view kChoice = "C";
inline constexpr std::string_view kFirstOutcome = "M1";
inline constexpr std::string_view kSecondOutcome = "M2";
inline constexpr std::string_view kHidden = "Lambda";
inline constexpr std::string_view kPosition = "V";

enum class NodeKind { observed, latent };

struct Node {
    std::string name;
    NodeKind kind = NodeKind::observed;

    friend bool operator==(const Node&, const Node&) = default;
};

using Arrow = std::pair<std::string, std::string>;

/// Directed acyclic graph with observed/latent tags. Node order is the
/// declaration order and is used for every deterministic traversal. A node
/// named "C" is the free choice and may not have incoming arrows.
class CausalDag {
public:
    CausalDag(std::vector<Node> nodes, std::vector<Arrow> arrows);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_node(std::string_view name) const;
    const Node& node(std::string_view name) const;
    bool has_arrow(std::string_view from, std::string_view to) const;

    std::vector<std::string> parents(std::string_view name) const;
    std::vector<std::string> children(std::string_view name) const;
    /// Neighbours in the skeleton, declaration order.
    std::vector<std::string> neighbours(std::string_view name) const;
    /// `names` together with all their ancestors.
    std::set<std::string> ancestors_of(const std::set<std::string>& names) const;
    std::set<std::string> descendants(std::string_view name) const;
    /// Kahn's algorithm, ties broken by declaration order.
    std::vector<std::string> topological_order() const;

    CausalDag with_arrow(std::string_view from, std::string_view to) const;

    friend bool operator==(const CausalDag&, const CausalDag&) = default;

private:
    std::size_t index_of(std::string_view name) const;

    std::vector<Node> nodes_;
    std::vector<Arrow> arrows_;
};

enum class Setting { pure, realist };

/// One of the eight candidate structures: pure or realist base arrows plus
/// any subset of the two disturbance arrows M1->M2 (outcome dependence) and
/// C->M2 (parameter dependence).
struct DagVariant {
    Setting setting = Setting::pure;
    bool outcome_arrow = false;
    bool parameter_arrow = false;

    /// "pure", "pure+o", "pure+p", "pure+op", "realist", ...
    std::string shorthand() const;
    static DagVariant parse(std::string_view text);

    /// Same setting and every disturbance arrow of *this is also in other.
    bool arrows_subset_of(const DagVariant& other) const;

    friend bool operator==(const DagVariant&, const DagVariant&) = default;
};

/// pure, pure+o, pure+p, pure+op, realist, realist+o, realist+p, realist+op.
std::array<DagVariant, 8> all_variants();

CausalDag build(const DagVariant& variant);

/// Reachability ("Bayes-ball") test. Throws UnknownNode for foreign names and
/// ContractViolation when x or y is in `given` or x == y.
bool d_separated(const CausalDag& g, std::string_view x, std::string_view y,
                 const std::set<std::string>& given);

/// Every simple path between x and y that is active given `given`, found by
/// explicit path enumeration. Empty exactly when d_separated holds.
std::vector<std::vector<std::string>> active_paths(const CausalDag& g, std::string_view x,
                                                   std::string_view y, const std::set<std::string>& given);

/// "V←Λ→M2←C".
std::string render_path(const CausalDag& g, const std::vector<std::string>& path);

/// Printable symbol: "Λ" for Lambda, the name otherwise.
std::string display_name(std::string_view name);
/// Lower-case value symbol used in factorizations: C=k, M1=i, M2=j, Λ=λ, V=v.
std::string value_symbol(std::string_view name);

struct Factor {
    std::string node;
    std::vector<std::string> parents;
};

/// Joint of the observed outcomes given the observed roots, as a sum over
/// latent values of a product of P(node | parents) factors.
struct MarkovFactorization {
    std::vector<std::string> conditioned;  // observed roots (the choice)
    std::vector<std::string> outcomes;     // other observed nodes, declaration order
    std::vector<std::string> summed;       // latent nodes, topological order
    std::vector<Factor> factors;           // outcomes first, then latents bottom-up

    std::string render() const;
};

MarkovFactorization markov_factorization(const CausalDag& g);

/// {"nodes":[{"name":"C","kind":"observed"},...],"arrows":[["C","M1"],...]}
std::string to_json(const CausalDag& g);
CausalDag dag_from_json(std::string_view text);

}  // namespace threebox::dag
