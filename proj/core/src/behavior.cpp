#include "threebox/behavior.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "threebox/error.hpp"

namespace threebox {

namespace {

constexpr std::array<const char*, 4> kCellKeys{"00", "01", "10", "11"};

std::string column_key(int k) { return "C=" + std::to_string(k); }

}  // namespace

Behavior::Behavior(std::map<int, Column> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) {
        throw ContractViolation("behavior needs at least one choice");
    }
    for (const auto& [k, column] : columns_) {
        Rational total(0);
        for (std::size_t cell = 0; cell < column.size(); ++cell) {
            if (column[cell] < 0) {
                throw ContractViolation("column " + column_key(k) + " has negative entry " +
                                        kCellKeys[cell] + " = " + to_fraction_string(column[cell]));
            }
            total += column[cell];
        }
        if (total != 1) {
            throw ContractViolation("column " + column_key(k) + " sums to " + to_fraction_string(total) +
                                    ", not 1");
        }
        choices_.push_back(k);
    }
}

const Column& Behavior::column(int k) const {
    const auto it = columns_.find(k);
    if (it == columns_.end()) {
        throw ContractViolation("behavior has no choice C=" + std::to_string(k));
    }
    return it->second;
}

Behavior three_box_behavior() {
    const auto r = [](long n, long d) { return make_rational(n, d); };
    // Columns ordered (00, 01, 10, 11).
    const Column looked_in_box_1_or_2{r(2, 3), r(0, 1), r(2, 9), r(1, 9)};
    const Column looked_in_box_3{r(2, 9), r(4, 9), r(2, 9), r(1, 9)};
    return Behavior({{1, looked_in_box_1_or_2}, {2, looked_in_box_1_or_2}, {3, looked_in_box_3}});
}

Behavior restrict(const Behavior& b, const std::vector<int>& keep) {
    if (keep.empty()) {
        throw ContractViolation("restriction to an empty choice set");
    }
    std::map<int, Column> columns;
    for (int k : keep) {
        if (!b.has_choice(k)) {
            throw ContractViolation("cannot restrict to C=" + std::to_string(k) +
                                    ": not a choice of this behavior");
        }
        columns.emplace(k, b.column(k));
    }
    return Behavior(std::move(columns));
}

Rational m2_marginal(const Behavior& b, int k) {
    const auto& col = b.column(k);
    return col[cell_index(0, 1)] + col[cell_index(1, 1)];
}

SignallingCheck is_signalling(const Behavior& b) {
    const auto& ks = b.choices();
    if (ks.size() < 2) {
        throw ContractViolation("signalling needs at least two choices");
    }
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t c = a + 1; c < ks.size(); ++c) {
            if (m2_marginal(b, ks[a]) != m2_marginal(b, ks[c])) {
                return {true, std::pair{ks[a], ks[c]}};
            }
        }
    }
    return {};
}

std::string to_json(const Behavior& b) {
    nlohmann::json doc;
    doc["choices"] = b.choices();
    auto& table = doc["table"];
    table = nlohmann::json::object();
    for (int k : b.choices()) {
        auto& col = table[column_key(k)];
        for (std::size_t cell = 0; cell < kCellKeys.size(); ++cell) {
            col[kCellKeys[cell]] = to_fraction_string(b.column(k)[cell]);
        }
    }
    return doc.dump(2) + "\n";
}

Behavior behavior_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("behavior JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("choices") || !doc.contains("table") ||
        !doc["choices"].is_array() || !doc["table"].is_object()) {
        throw ParseError("behavior JSON must have a 'choices' array and a 'table' object");
    }
    std::map<int, Column> columns;
    for (const auto& label : doc["choices"]) {
        if (!label.is_number_integer()) {
            throw ParseError("choice labels must be integers");
        }
        const int k = label.get<int>();
        const auto key = column_key(k);
        if (!doc["table"].contains(key)) {
            throw ParseError("column " + key + " missing from table");
        }
        const auto& col_json = doc["table"][key];
        Column col;
        Rational total(0);
        for (std::size_t cell = 0; cell < kCellKeys.size(); ++cell) {
            if (!col_json.contains(kCellKeys[cell]) || !col_json[kCellKeys[cell]].is_string()) {
                throw ParseError("column " + key + " lacks string entry '" + kCellKeys[cell] + "'");
            }
            col[cell] = parse_rational(col_json[kCellKeys[cell]].get<std::string>());
            if (col[cell] < 0) {
                throw ParseError("column " + key + " has negative entry " + kCellKeys[cell]);
            }
            total += col[cell];
        }
        if (total != 1) {
            throw ParseError("column " + key + " is not normalized (sums to " + to_fraction_string(total) +
                             ")");
        }
        if (!columns.emplace(k, std::move(col)).second) {
            throw ParseError("duplicate choice label " + std::to_string(k));
        }
    }
    if (doc["table"].size() != columns.size()) {
        throw ParseError("table has columns not listed in 'choices'");
    }
    return Behavior(std::move(columns));
}

std::string to_markdown(const Behavior& b) {
    std::ostringstream out;
    out << "| C | P(0,0) | P(0,1) | P(1,0) | P(1,1) |\n";
    out << "|---|---|---|---|---|\n";
    for (int k : b.choices()) {
        out << "| " << k;
        for (const auto& v : b.column(k)) {
            out << " | " << to_display_string(v);
        }
        out << " |\n";
    }
    return out.str();
}

}  // namespace threebox
