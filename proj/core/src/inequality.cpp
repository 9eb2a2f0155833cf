#include "threebox/inequality.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "threebox/error.hpp"

namespace threebox::inequality {

namespace {

void require_two_choices(const Behavior& b) {
    if (b.choices().size() < 2) {
        throw ContractViolation("instrumental inequalities need at least two choices");
    }
}

}  // namespace

std::string form_name(Form f) { return f == Form::compact ? "compact" : "pairwise"; }

Form parse_form(std::string_view text) {
    if (text == "compact") return Form::compact;
    if (text == "pairwise") return Form::pairwise;
    throw ParseError("unknown inequality form '" + std::string(text) + "' (expected compact|pairwise)");
}

std::string Entry::label() const {
    if (line == 0) {
        return "i=" + std::to_string(outcome);
    }
    return "line " + std::to_string(line) + ", kl=" + std::to_string(k) + std::to_string(l);
}

bool Report::violated() const {
    return std::any_of(entries.begin(), entries.end(), [](const Entry& e) { return e.violated; });
}

const Entry& Report::worst() const {
    if (entries.empty()) {
        throw ContractViolation("empty inequality report");
    }
    const Entry* best = &entries.front();
    for (const auto& e : entries) {
        if (e.lhs > best->lhs) {
            best = &e;
        }
    }
    return *best;
}

std::vector<Entry> Report::violations() const {
    std::vector<Entry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const Entry& e) { return e.violated; });
    return out;
}

Report compact_check(const Behavior& b) {
    require_two_choices(b);
    Report report{Form::compact, {}};
    for (int i = 0; i < 2; ++i) {
        Rational lhs(0);
        for (int j = 0; j < 2; ++j) {
            Rational largest(0);
            for (int k : b.choices()) {
                largest = std::max<Rational>(largest, b.at(i, j, k));
            }
            lhs += largest;
        }
        Entry e;
        e.outcome = i;
        e.violated = lhs > e.bound;
        e.lhs = std::move(lhs);
        report.entries.push_back(std::move(e));
    }
    return report;
}

Report pairwise_check(const Behavior& b) {
    require_two_choices(b);
    // (M1, M2 at k) + (M1, M2 at l), same M1, opposite M2.
    struct Line {
        int m1;
        int m2_at_k;
        int m2_at_l;
    };
    constexpr Line lines[] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}, {1, 1, 0}};

    Report report{Form::pairwise, {}};
    const auto& ks = b.choices();
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t c = a + 1; c < ks.size(); ++c) {
            for (int n = 0; n < 4; ++n) {
                const auto& line = lines[n];
                Entry e;
                e.outcome = line.m1;
                e.line = n + 1;
                e.k = ks[a];
                e.l = ks[c];
                e.lhs = b.at(line.m1, line.m2_at_k, e.k) + b.at(line.m1, line.m2_at_l, e.l);
                e.violated = e.lhs > e.bound;
                report.entries.push_back(std::move(e));
            }
        }
    }
    return report;
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["form"] = form_name(r.form);
    doc["violated"] = r.violated();
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json entry;
        if (r.form == Form::compact) {
            entry["i"] = e.outcome;
        } else {
            entry["line"] = e.line;
            entry["k"] = e.k;
            entry["l"] = e.l;
        }
        entry["lhs"] = to_fraction_string(e.lhs);
        entry["bound"] = to_fraction_string(e.bound);
        entry["violated"] = e.violated;
        doc["entries"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string to_markdown(const Report& r) {
    std::ostringstream out;
    out << "Instrumental inequalities (" << form_name(r.form) << " form): "
        << (r.violated() ? "VIOLATED" : "satisfied") << "\n\n";
    out << "| entry | lhs | bound | violated |\n|---|---|---|---|\n";
    for (const auto& e : r.entries) {
        const auto mark = e.violated ? std::string("**") : std::string();
        out << "| " << mark << e.label() << mark << " | " << mark << to_display_string(e.lhs) << mark << " | "
            << to_display_string(e.bound) << " | " << (e.violated ? "**yes**" : "no") << " |\n";
    }
    return out.str();
}

}  // namespace threebox::inequality
