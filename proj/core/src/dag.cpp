#include "threebox/dag.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include <json.hpp>

#include "threebox/error.hpp"

namespace threebox::dag {

CausalDag::CausalDag(std::vector<Node> nodes, std::vector<Arrow> arrows)
    : nodes_(std::move(nodes)), arrows_(std::move(arrows)) {
    for (std::size_t a = 0; a < nodes_.size(); ++a) {
        if (nodes_[a].name.empty()) {
            throw ContractViolation("node names must be nonempty");
        }
        for (std::size_t b = a + 1; b < nodes_.size(); ++b) {
            if (nodes_[a].name == nodes_[b].name) {
                throw ContractViolation("duplicate node " + nodes_[a].name);
            }
        }
    }
    std::set<Arrow> seen;
    for (const auto& [from, to] : arrows_) {
        index_of(from);
        index_of(to);
        if (from == to) {
            throw ContractViolation("self-loop on " + from);
        }
        if (to == kChoice) {
            throw ContractViolation("the choice C is a free variable and cannot have incoming arrows");
        }
        if (!seen.insert({from, to}).second) {
            throw ContractViolation("duplicate arrow " + from + "->" + to);
        }
    }
    if (topological_order().size() != nodes_.size()) {
        throw ContractViolation("graph has a directed cycle");
    }
}

std::size_t CausalDag::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].name == name) {
            return i;
        }
    }
    throw UnknownNode("unknown node '" + std::string(name) + "'");
}

bool CausalDag::has_node(std::string_view name) const {
    return std::any_of(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.name == name; });
}

const Node& CausalDag::node(std::string_view name) const { return nodes_[index_of(name)]; }

bool CausalDag::has_arrow(std::string_view from, std::string_view to) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [&](const Arrow& a) { return a.first == from && a.second == to; });
}

std::vector<std::string> CausalDag::parents(std::string_view name) const {
    index_of(name);
    std::vector<std::string> out;
    for (const auto& n : nodes_) {
        if (has_arrow(n.name, name)) {
            out.push_back(n.name);
        }
    }
    return out;
}

std::vector<std::string> CausalDag::children(std::string_view name) const {
    index_of(name);
    std::vector<std::string> out;
    for (const auto& n : nodes_) {
        if (has_arrow(name, n.name)) {
            out.push_back(n.name);
        }
    }
    return out;
}

std::vector<std::string> CausalDag::neighbours(std::string_view name) const {
    index_of(name);
    std::vector<std::string> out;
    for (const auto& n : nodes_) {
        if (has_arrow(name, n.name) || has_arrow(n.name, name)) {
            out.push_back(n.name);
        }
    }
    return out;
}

std::set<std::string> CausalDag::ancestors_of(const std::set<std::string>& names) const {
    std::set<std::string> out;
    std::vector<std::string> stack(names.begin(), names.end());
    while (!stack.empty()) {
        auto current = std::move(stack.back());
        stack.pop_back();
        if (!out.insert(current).second) {
            continue;
        }
        for (auto& p : parents(current)) {
            stack.push_back(std::move(p));
        }
    }
    return out;
}

std::set<std::string> CausalDag::descendants(std::string_view name) const {
    std::set<std::string> out;
    std::vector<std::string> stack = children(name);
    while (!stack.empty()) {
        auto current = std::move(stack.back());
        stack.pop_back();
        if (!out.insert(current).second) {
            continue;
        }
        for (auto& c : children(current)) {
            stack.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<std::string> CausalDag::topological_order() const {
    std::vector<int> in_degree(nodes_.size(), 0);
    for (const auto& a : arrows_) {
        ++in_degree[index_of(a.second)];
    }
    std::vector<std::string> order;
    std::vector<bool> done(nodes_.size(), false);
    while (order.size() < nodes_.size()) {
        std::size_t pick = nodes_.size();
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (!done[i] && in_degree[i] == 0) {
                pick = i;
                break;
            }
        }
        if (pick == nodes_.size()) {
            break;  // cycle
        }
        done[pick] = true;
        order.push_back(nodes_[pick].name);
        for (const auto& a : arrows_) {
            if (a.first == nodes_[pick].name) {
                --in_degree[index_of(a.second)];
            }
        }
    }
    return order;
}

CausalDag CausalDag::with_arrow(std::string_view from, std::string_view to) const {
    if (has_arrow(from, to)) {
        return *this;
    }
    auto arrows = arrows_;
    arrows.emplace_back(std::string(from), std::string(to));
    return CausalDag(nodes_, std::move(arrows));
}

std::string DagVariant::shorthand() const {
    std::string out = setting == Setting::pure ? "pure" : "realist";
    if (outcome_arrow || parameter_arrow) {
        out += '+';
        if (outcome_arrow) {
            out += 'o';
        }
        if (parameter_arrow) {
            out += 'p';
        }
    }
    return out;
}

DagVariant DagVariant::parse(std::string_view text) {
    for (const auto& v : all_variants()) {
        if (v.shorthand() == text) {
            return v;
        }
    }
    throw ParseError("unknown DAG variant '" + std::string(text) +
                     "' (expected pure|pure+o|pure+p|pure+op|realist|realist+o|realist+p|realist+op)");
}

bool DagVariant::arrows_subset_of(const DagVariant& other) const {
    return setting == other.setting && (!outcome_arrow || other.outcome_arrow) &&
           (!parameter_arrow || other.parameter_arrow);
}

std::array<DagVariant, 8> all_variants() {
    std::array<DagVariant, 8> out;
    std::size_t n = 0;
    for (auto setting : {Setting::pure, Setting::realist}) {
        for (bool parameter : {false, true}) {
            for (bool outcome : {false, true}) {
                out[n++] = DagVariant{setting, outcome, parameter};
            }
        }
    }
    // pure, pure+o, pure+p, pure+op, ...
    return out;
}

CausalDag build(const DagVariant& variant) {
    const std::string c(kChoice), m1(kFirstOutcome), m2(kSecondOutcome), lambda(kHidden), v(kPosition);
    std::vector<Node> nodes{{c, NodeKind::observed},
                            {m1, NodeKind::observed},
                            {m2, NodeKind::observed},
                            {lambda, NodeKind::latent}};
    std::vector<Arrow> arrows{{c, m1}};
    if (variant.setting == Setting::pure) {
        arrows.emplace_back(lambda, m1);
    } else {
        nodes.push_back({v, NodeKind::latent});
        arrows.emplace_back(v, m1);
        arrows.emplace_back(lambda, v);
    }
    arrows.emplace_back(lambda, m2);
    if (variant.outcome_arrow) {
        arrows.emplace_back(m1, m2);
    }
    if (variant.parameter_arrow) {
        arrows.emplace_back(c, m2);
    }
    return CausalDag(std::move(nodes), std::move(arrows));
}

namespace {

void check_query(const CausalDag& g, std::string_view x, std::string_view y, const std::set<std::string>& given) {
    g.node(x);
    g.node(y);
    for (const auto& z : given) {
        g.node(z);
    }
    if (x == y) {
        throw ContractViolation("d-separation query needs two distinct nodes");
    }
    if (given.contains(std::string(x)) || given.contains(std::string(y))) {
        throw ContractViolation("query endpoints may not be in the conditioning set");
    }
}

}  // namespace

bool d_separated(const CausalDag& g, std::string_view x, std::string_view y, const std::set<std::string>& given) {
    check_query(g, x, y, given);
    const auto opened = g.ancestors_of(given);

    // A ball travels "up" when it arrived from a child and "down" when it
    // arrived from a parent.
    enum Direction { up, down };
    std::set<std::pair<std::string, Direction>> visited;
    std::deque<std::pair<std::string, Direction>> queue{{std::string(x), up}};
    while (!queue.empty()) {
        auto [node, dir] = queue.front();
        queue.pop_front();
        if (!visited.insert({node, dir}).second) {
            continue;
        }
        const bool observed = given.contains(node);
        if (!observed && node == y) {
            return false;
        }
        if (dir == up && !observed) {
            for (auto& p : g.parents(node)) {
                queue.emplace_back(std::move(p), up);
            }
            for (auto& c : g.children(node)) {
                queue.emplace_back(std::move(c), down);
            }
        } else if (dir == down) {
            if (!observed) {
                for (auto& c : g.children(node)) {
                    queue.emplace_back(std::move(c), down);
                }
            }
            if (opened.contains(node)) {
                for (auto& p : g.parents(node)) {
                    queue.emplace_back(std::move(p), up);
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<std::string>> active_paths(const CausalDag& g, std::string_view x, std::string_view y,
                                                   const std::set<std::string>& given) {
    check_query(g, x, y, given);
    const auto opened = g.ancestors_of(given);

    const auto is_active = [&](const std::vector<std::string>& path) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const bool collider = g.has_arrow(path[i - 1], path[i]) && g.has_arrow(path[i + 1], path[i]);
            if (collider ? !opened.contains(path[i]) : given.contains(path[i])) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::vector<std::string>> out;
    std::vector<std::string> path{std::string(x)};
    std::function<void()> extend = [&] {
        if (path.back() == y) {
            if (is_active(path)) {
                out.push_back(path);
            }
            return;
        }
        for (auto& next : g.neighbours(path.back())) {
            if (std::find(path.begin(), path.end(), next) != path.end()) {
                continue;
            }
            path.push_back(std::move(next));
            extend();
            path.pop_back();
        }
    };
    extend();
    return out;
}

std::string display_name(std::string_view name) {
    if (name == kHidden) {
        return "Λ";
    }
    return std::string(name);
}

std::string value_symbol(std::string_view name) {
    if (name == kChoice) return "k";
    if (name == kFirstOutcome) return "i";
    if (name == kSecondOutcome) return "j";
    if (name == kHidden) return "λ";
    std::string out(name);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string render_path(const CausalDag& g, const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            out += g.has_arrow(path[i - 1], path[i]) ? "→" : "←";
        }
        out += display_name(path[i]);
    }
    return out;
}

MarkovFactorization markov_factorization(const CausalDag& g) {
    MarkovFactorization f;
    const auto order = g.topological_order();
    for (const auto& name : order) {
        if (g.node(name).kind == NodeKind::latent) {
            f.summed.push_back(name);
        }
    }
    for (const auto& n : g.nodes()) {
        if (n.kind == NodeKind::latent) {
            continue;
        }
        (g.parents(n.name).empty() ? f.conditioned : f.outcomes).push_back(n.name);
    }
    for (const auto& name : f.outcomes) {
        f.factors.push_back({name, g.parents(name)});
    }
    for (auto it = f.summed.rbegin(); it != f.summed.rend(); ++it) {
        f.factors.push_back({*it, g.parents(*it)});
    }
    return f;
}

std::string MarkovFactorization::render() const {
    const auto assignment = [](const std::string& name) { return display_name(name) + "=" + value_symbol(name); };
    const auto joined = [&](const std::vector<std::string>& names) {
        std::string s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            s += (i ? "," : "") + assignment(names[i]);
        }
        return s;
    };

    std::string out = "P(" + joined(outcomes);
    if (!conditioned.empty()) {
        out += "|" + joined(conditioned);
    }
    out += ") = ";
    if (!summed.empty()) {
        out += "Σ_{";
        for (std::size_t i = 0; i < summed.size(); ++i) {
            out += (i ? "," : "") + value_symbol(summed[i]);
        }
        out += "} ";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) {
            out += "·";
        }
        out += "P(" + assignment(factors[i].node);
        if (!factors[i].parents.empty()) {
            out += "|" + joined(factors[i].parents);
        }
        out += ")";
    }
    return out;
}

std::string to_json(const CausalDag& g) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes()) {
        doc["nodes"].push_back({{"name", n.name}, {"kind", n.kind == NodeKind::observed ? "observed" : "latent"}});
    }
    doc["arrows"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : g.arrows()) {
        doc["arrows"].push_back({from, to});
    }
    return doc.dump(2) + "\n";
}

CausalDag dag_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        std::vector<Node> nodes;
        for (const auto& n : doc.at("nodes")) {
            const auto kind = n.at("kind").get<std::string>();
            if (kind != "observed" && kind != "latent") {
                throw ParseError("node kind must be 'observed' or 'latent', got '" + kind + "'");
            }
            nodes.push_back({n.at("name").get<std::string>(), kind == "observed" ? NodeKind::observed : NodeKind::latent});
        }
        std::vector<Arrow> arrows;
        for (const auto& a : doc.at("arrows")) {
            if (!a.is_array() || a.size() != 2) {
                throw ParseError("arrows must be [from, to] pairs");
            }
            arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
        }
        return CausalDag(std::move(nodes), std::move(arrows));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("DAG JSON: ") + e.what());
    }
}

}  // namespace threebox::dag
