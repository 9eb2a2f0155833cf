#include "threebox/feasibility.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <json.hpp>

#include "threebox/error.hpp"

namespace threebox::feasibility {

M2Inputs m2_inputs(const dag::DagVariant& variant) {
    if (variant.outcome_arrow && variant.parameter_arrow) return M2Inputs::choice_and_outcome;
    if (variant.parameter_arrow) return M2Inputs::choice;
    if (variant.outcome_arrow) return M2Inputs::outcome;
    return M2Inputs::none;
}

namespace {

std::size_t m2_table_size(M2Inputs inputs, std::size_t choices) {
    switch (inputs) {
        case M2Inputs::none: return 1;
        case M2Inputs::outcome: return 2;
        case M2Inputs::choice: return choices;
        case M2Inputs::choice_and_outcome: return 2 * choices;
    }
    return 0;
}

std::size_t m2_input_index(M2Inputs inputs, std::size_t choice_index, int m1) {
    const auto m1_index = static_cast<std::size_t>(m1);
    switch (inputs) {
        case M2Inputs::none: return 0;
        case M2Inputs::outcome: return m1_index;
        case M2Inputs::choice: return choice_index;
        case M2Inputs::choice_and_outcome: return 2 * choice_index + m1_index;
    }
    return 0;
}

std::vector<int> bits(std::size_t value, std::size_t width) {
    std::vector<int> out(width);
    for (std::size_t b = 0; b < width; ++b) {
        out[b] = static_cast<int>((value >> b) & 1U);
    }
    return out;
}

std::string digits(const std::vector<int>& values, std::size_t group = 0) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (group != 0 && i != 0 && i % group == 0) {
            out += ',';
        }
        out += static_cast<char>('0' + values[i]);
    }
    return out;
}

std::string choices_label(const std::vector<int>& choices) {
    std::string out;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        out += (i ? "," : "") + std::to_string(choices[i]);
    }
    return out;
}

}  // namespace

StrategySpace::StrategySpace(dag::DagVariant variant, std::vector<int> choices)
    : variant_(variant), choices_(std::move(choices)) {
    if (choices_.empty()) {
        throw ContractViolation("strategy space needs at least one choice");
    }
    if (choices_.size() > 8) {
        throw ContractViolation("at most 8 choices are supported");
    }
    const auto table_size = m2_table_size(m2_inputs(variant_), choices_.size());
    const std::size_t m2_count = std::size_t{1} << table_size;

    std::vector<Strategy> heads;
    if (variant_.setting == dag::Setting::pure) {
        for (std::size_t f = 0; f < (std::size_t{1} << choices_.size()); ++f) {
            heads.push_back({std::nullopt, bits(f, choices_.size()), {}});
        }
    } else {
        for (int v = 1; v <= kPositions; ++v) {
            heads.push_back({v, {}, {}});
        }
    }
    strategies_.reserve(heads.size() * m2_count);
    for (const auto& head : heads) {
        for (std::size_t g = 0; g < m2_count; ++g) {
            Strategy s = head;
            s.m2_response = bits(g, table_size);
            strategies_.push_back(std::move(s));
        }
    }
}

std::pair<int, int> StrategySpace::outcome(std::size_t strategy, std::size_t choice_index) const {
    const auto& s = strategies_.at(strategy);
    const int m1 = s.position ? (*s.position == choices_.at(choice_index) ? 1 : 0) : s.m1_response.at(choice_index);
    const int m2 = s.m2_response.at(m2_input_index(m2_inputs(variant_), choice_index, m1));
    return {m1, m2};
}

std::string StrategySpace::describe(std::size_t strategy) const {
    const auto& s = strategies_.at(strategy);
    std::string out = s.position ? "V=" + std::to_string(*s.position) : "M1(C)=" + digits(s.m1_response);
    switch (m2_inputs(variant_)) {
        case M2Inputs::none: out += " M2=" + digits(s.m2_response); break;
        case M2Inputs::outcome: out += " M2(M1)=" + digits(s.m2_response); break;
        case M2Inputs::choice: out += " M2(C)=" + digits(s.m2_response); break;
        case M2Inputs::choice_and_outcome: out += " M2(C,M1)=" + digits(s.m2_response, 2); break;
    }
    return out;
}

StrategySpace enumerate_strategies(const dag::DagVariant& variant, const std::vector<int>& choices) {
    return StrategySpace(variant, choices);
}

Behavior reconstruct(const StrategySpace& space, const std::vector<WeightedStrategy>& mixture) {
    std::map<int, Column> columns;
    for (std::size_t c = 0; c < space.choices().size(); ++c) {
        Column col;
        for (auto& cell : col) {
            cell = 0;
        }
        for (const auto& [index, weight] : mixture) {
            const auto [m1, m2] = space.outcome(index, c);
            col[cell_index(m1, m2)] += weight;
        }
        columns.emplace(space.choices()[c], std::move(col));
    }
    return Behavior(std::move(columns));
}

LinearSystem build_system(const StrategySpace& space, const Behavior& b) {
    const auto& choices = space.choices();
    LinearSystem sys;
    sys.matrix.assign(1 + 4 * choices.size(), std::vector<Rational>(space.size(), Rational(0)));
    sys.rhs.assign(sys.matrix.size(), Rational(0));
    sys.rhs[0] = 1;
    for (std::size_t s = 0; s < space.size(); ++s) {
        sys.matrix[0][s] = 1;
    }
    for (std::size_t c = 0; c < choices.size(); ++c) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                sys.rhs[1 + 4 * c + cell_index(i, j)] = b.at(i, j, choices[c]);
            }
        }
        for (std::size_t s = 0; s < space.size(); ++s) {
            const auto [m1, m2] = space.outcome(s, c);
            sys.matrix[1 + 4 * c + cell_index(m1, m2)][s] = 1;
        }
    }
    return sys;
}

FeasibilityResult decide(const Behavior& b, const dag::DagVariant& variant) {
    const auto space = enumerate_strategies(variant, b.choices());
    const auto sys = build_system(space, b);
    const auto lp = lp::solve_feasibility(sys.matrix, sys.rhs);

    FeasibilityResult result;
    result.variant = variant;
    result.choices = b.choices();
    result.strategy_count = space.size();
    result.feasible = lp.feasible;

    if (lp.feasible) {
        for (std::size_t s = 0; s < lp.solution.size(); ++s) {
            if (lp.solution[s] != 0) {
                result.certificate.push_back({s, lp.solution[s]});
                result.certificate_labels.push_back(space.describe(s));
            }
        }
        if (!(reconstruct(space, result.certificate) == b)) {
            throw ContractViolation("simplex certificate does not reconstruct the behavior");
        }
        return result;
    }

    if (!lp::is_farkas_certificate(sys.matrix, sys.rhs, lp.farkas)) {
        throw ContractViolation("simplex reported infeasibility without a valid Farkas certificate");
    }
    result.farkas = lp.farkas;
    if (!variant.parameter_arrow && b.choices().size() >= 2) {
        const auto report = inequality::pairwise_check(b);
        if (report.violated()) {
            result.inequality_witness = report.violations().front();
        }
        if (!variant.outcome_arrow) {
            result.signalling_witness = is_signalling(b).witness;
        }
    }
    return result;
}

const Figure4Cell& Figure4Report::cell(const dag::DagVariant& variant, const std::vector<int>& scope) const {
    for (const auto& c : cells) {
        if (c.variant == variant && c.scope == scope) {
            return c;
        }
    }
    throw ContractViolation("no report cell for " + variant.shorthand() + " on C=" + choices_label(scope));
}

Figure4Report figure4_report(const Behavior& b, std::vector<std::vector<int>> scopes) {
    Figure4Report report;
    report.scopes = std::move(scopes);

    std::vector<std::future<Figure4Cell>> pending;
    for (const auto& variant : dag::all_variants()) {
        for (const auto& scope : report.scopes) {
            pending.push_back(std::async(std::launch::async, [&b, variant, scope] {
                return Figure4Cell{variant, scope, decide(restrict(b, scope), variant), false};
            }));
        }
    }
    for (auto& f : pending) {
        report.cells.push_back(f.get());
    }

    for (auto& cell : report.cells) {
        if (!cell.result.feasible) {
            continue;
        }
        cell.minimal = std::none_of(report.cells.begin(), report.cells.end(), [&](const Figure4Cell& other) {
            return other.scope == cell.scope && other.result.feasible && other.variant != cell.variant &&
                   other.variant.arrows_subset_of(cell.variant);
        });
    }
    return report;
}

namespace {

nlohmann::ordered_json result_json(const FeasibilityResult& r) {
    nlohmann::ordered_json doc;
    doc["variant"] = r.variant.shorthand();
    doc["choices"] = r.choices;
    doc["strategies"] = r.strategy_count;
    doc["feasible"] = r.feasible;
    if (r.feasible) {
        doc["certificate"] = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < r.certificate.size(); ++n) {
            doc["certificate"].push_back({{"index", r.certificate[n].index},
                                          {"strategy", r.certificate_labels[n]},
                                          {"weight", to_fraction_string(r.certificate[n].weight)}});
        }
    } else {
        std::vector<std::string> y;
        for (const auto& v : r.farkas) {
            y.push_back(to_fraction_string(v));
        }
        doc["farkas"] = y;
        if (r.inequality_witness) {
            doc["inequality_witness"] = {{"entry", r.inequality_witness->label()},
                                         {"lhs", to_fraction_string(r.inequality_witness->lhs)}};
        }
        if (r.signalling_witness) {
            doc["signalling_witness"] = {r.signalling_witness->first, r.signalling_witness->second};
        }
    }
    return doc;
}

std::string witness_summary(const FeasibilityResult& r) {
    if (r.feasible) {
        return std::to_string(r.certificate.size()) + " strategies";
    }
    if (r.inequality_witness) {
        return "instrumental " + r.inequality_witness->label() + ": " + to_display_string(r.inequality_witness->lhs) +
               " > 1";
    }
    if (r.signalling_witness) {
        return "M2 marginal differs for C=" + std::to_string(r.signalling_witness->first) + "," +
               std::to_string(r.signalling_witness->second);
    }
    return "exact LP (Farkas)";
}

}  // namespace

std::string to_json(const FeasibilityResult& r) { return result_json(r).dump(2) + "\n"; }

std::string to_markdown(const FeasibilityResult& r) {
    std::ostringstream out;
    out << "Variant " << r.variant.shorthand() << " on C=" << choices_label(r.choices) << ": "
        << (r.feasible ? "feasible" : "infeasible") << " (" << r.strategy_count << " strategies)\n\n";
    if (r.feasible) {
        out << "| strategy | weight |\n|---|---|\n";
        for (std::size_t n = 0; n < r.certificate.size(); ++n) {
            out << "| " << r.certificate_labels[n] << " | " << to_display_string(r.certificate[n].weight) << " |\n";
        }
    } else {
        out << "Witness: " << witness_summary(r) << "\n";
        out << "Farkas vector: (";
        for (std::size_t n = 0; n < r.farkas.size(); ++n) {
            out << (n ? ", " : "") << to_display_string(r.farkas[n]);
        }
        out << ")\n";
    }
    return out.str();
}

std::string to_json(const Figure4Report& r) {
    nlohmann::ordered_json doc;
    doc["scopes"] = r.scopes;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& variant : dag::all_variants()) {
        nlohmann::ordered_json row;
        row["variant"] = variant.shorthand();
        row["cells"] = nlohmann::ordered_json::array();
        for (const auto& scope : r.scopes) {
            const auto& cell = r.cell(variant, scope);
            auto entry = result_json(cell.result);
            entry.erase("variant");
            entry["minimal"] = cell.minimal;
            row["cells"].push_back(std::move(entry));
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string to_markdown(const Figure4Report& r) {
    std::ostringstream out;
    out << "| variant |";
    for (const auto& scope : r.scopes) {
        out << " C=" << choices_label(scope) << " |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < r.scopes.size(); ++i) {
        out << "---|";
    }
    out << "\n";
    for (const auto& variant : dag::all_variants()) {
        out << "| " << variant.shorthand() << " |";
        for (const auto& scope : r.scopes) {
            const auto& cell = r.cell(variant, scope);
            const auto verdict = cell.result.feasible ? std::string("feasible") : std::string("infeasible");
            out << " " << (cell.minimal ? "**" + verdict + "** (minimal)" : verdict) << "; "
                << witness_summary(cell.result) << " |";
        }
        out << "\n";
    }
    out << "\nBold cells are minimal: feasible, with no feasible variant of the same setting using a strict subset "
           "of its arrows.\n";
    return out.str();
}

}  // namespace threebox::feasibility
