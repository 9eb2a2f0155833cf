#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "threebox/rational.hpp"

namespace threebox {

/// P(M1=i, M2=j | C=k) for one k, stored in (00, 01, 10, 11) order.
using Column = std::array<Rational, 4>;

inline constexpr std::size_t cell_index(int m1, int m2) { return static_cast<std::size_t>(2 * m1 + m2); }

/// The observed statistics P(M1, M2 | C) with M1, M2 binary and explicit
/// choice labels. Every column is nonnegative and sums to exactly 1.
class Behavior {
public:
    /// Throws ContractViolation naming the offending column when a column has
    /// a negative entry or does not sum to 1.
    explicit Behavior(std::map<int, Column> columns);

    const std::vector<int>& choices() const { return choices_; }
    bool has_choice(int k) const { return columns_.contains(k); }

    const Column& column(int k) const;
    const Rational& at(int m1, int m2, int k) const { return column(k)[cell_index(m1, m2)]; }

    friend bool operator==(const Behavior& a, const Behavior& b) { return a.columns_ == b.columns_; }

private:
    std::vector<int> choices_;
    std::map<int, Column> columns_;
};

/// The full three-box statistics for C = 1, 2, 3.
Behavior three_box_behavior();

/// Keeps only the listed choices. Throws on an empty set or a label the
/// behavior does not have.
Behavior restrict(const Behavior& b, const std::vector<int>& keep);

/// P(M2=1 | C=k).
Rational m2_marginal(const Behavior& b, int k);

struct SignallingCheck {
    bool signalling = false;
    std::optional<std::pair<int, int>> witness;
};

/// Whether the M2 marginal depends on the choice. The witness is the first
/// pair (k, l), k < l in choice order, whose marginals differ.
SignallingCheck is_signalling(const Behavior& b);

/// Canonical JSON: choices list, then one object per column keyed "C=k"
/// holding "00".."11" as "num/den" strings. Output is byte-stable.
std::string to_json(const Behavior& b);

/// Inverse of to_json. Rejects negative entries and non-normalized columns
/// with a ParseError naming the column.
Behavior behavior_from_json(std::string_view text);

/// Markdown table with one row per choice.
std::string to_markdown(const Behavior& b);

}  // namespace threebox
