#pragma once

// Instrumental inequalities for a binary-outcome instrument scenario with C
// as the instrument, M1 as treatment and M2 as response. Valid whenever C
// reaches M2 only through M1.

#include <optional>
#include <string>
#include <vector>

#include "threebox/behavior.hpp"

namespace threebox::inequality {

enum class Form { compact, pairwise };

std::string form_name(Form f);
Form parse_form(std::string_view text);

struct Entry {
    // compact: outcome = i, line/k/l unused (0).
    // pairwise: line in 1..4 and the pair (k, l) with k before l; outcome is
    // the M1 value the line constrains.
    int outcome = 0;
    int line = 0;
    int k = 0;
    int l = 0;
    Rational lhs;
    Rational bound{1};
    bool violated = false;

    std::string label() const;
};

struct Report {
    Form form = Form::compact;
    std::vector<Entry> entries;

    bool violated() const;
    /// The largest left-hand side; the first such entry on ties.
    const Entry& worst() const;
    std::vector<Entry> violations() const;
};

/// max_i sum_j max_k P(M1=i, M2=j | C=k) <= 1, one entry per i.
Report compact_check(const Behavior& b);

/// For every pair k < l of choices, the four lines
///   P(0,0|k) + P(0,1|l),  P(1,0|k) + P(1,1|l),
///   P(0,1|k) + P(0,0|l),  P(1,1|k) + P(1,0|l)   each <= 1.
Report pairwise_check(const Behavior& b);

std::string to_json(const Report& r);
/// Table of all entries; violated rows are bold.
std::string to_markdown(const Report& r);

}  // namespace threebox::inequality
