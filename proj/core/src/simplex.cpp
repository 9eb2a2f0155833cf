#include "threebox/simplex.hpp"

#include "threebox/error.hpp"

namespace threebox::lp {

FeasibilityOutcome solve_feasibility(const DenseMatrix& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) {
        throw ContractViolation("right-hand side length differs from the number of rows");
    }
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto& row : a) {
        if (row.size() != cols) {
            throw ContractViolation("constraint matrix is ragged");
        }
    }

    // Tableau over [original | artificial] columns; rows with negative rhs
    // are negated so the artificial basis starts feasible.
    const std::size_t width = cols + rows;
    std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(width));
    std::vector<Rational> rhs(rows);
    std::vector<int> sign(rows, 1);
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        sign[r] = b[r] < 0 ? -1 : 1;
        for (std::size_t c = 0; c < cols; ++c) {
            tableau[r][c] = sign[r] * a[r][c];
        }
        tableau[r][cols + r] = 1;
        rhs[r] = sign[r] * b[r];
        basis[r] = cols + r;
    }

    // Reduced costs of the phase-one objective (sum of artificials) and
    // minus its current value.
    std::vector<Rational> reduced(width);
    Rational neg_objective(0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            reduced[c] -= tableau[r][c];
        }
        neg_objective -= rhs[r];
    }

    FeasibilityOutcome out;
    while (true) {
        std::size_t entering = width;
        for (std::size_t c = 0; c < width; ++c) {
            if (reduced[c] < 0) {
                entering = c;
                break;
            }
        }
        if (entering == width) {
            break;
        }

        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tableau[r][entering] <= 0) {
                continue;
            }
            Rational ratio = rhs[r] / tableau[r][entering];
            if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = std::move(ratio);
            }
        }
        if (leaving == rows) {
            // The phase-one objective is bounded below by 0.
            throw ContractViolation("phase-one simplex found an unbounded ray");
        }

        const Rational pivot = tableau[leaving][entering];
        for (auto& v : tableau[leaving]) {
            if (v != 0) {
                v /= pivot;
            }
        }
        rhs[leaving] /= pivot;
        const auto& pivot_row = tableau[leaving];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leaving || tableau[r][entering] == 0) {
                continue;
            }
            const Rational factor = tableau[r][entering];
            for (std::size_t c = 0; c < width; ++c) {
                if (pivot_row[c] != 0) {
                    tableau[r][c] -= factor * pivot_row[c];
                }
            }
            rhs[r] -= factor * rhs[leaving];
        }
        const Rational factor = reduced[entering];
        for (std::size_t c = 0; c < width; ++c) {
            if (pivot_row[c] != 0) {
                reduced[c] -= factor * pivot_row[c];
            }
        }
        neg_objective -= factor * rhs[leaving];
        basis[leaving] = entering;
        ++out.pivots;
    }

    if (neg_objective == 0) {
        out.feasible = true;
        out.solution.assign(cols, Rational(0));
        for (std::size_t r = 0; r < rows; ++r) {
            if (basis[r] < cols) {
                out.solution[basis[r]] = rhs[r];
            }
        }
    } else {
        // Artificial r has cost 1, so its reduced cost is 1 - y_r.
        out.farkas.resize(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            out.farkas[r] = sign[r] * (1 - reduced[cols + r]);
        }
    }
    return out;
}

bool is_farkas_certificate(const DenseMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
    if (y.size() != a.size() || b.size() != a.size()) {
        return false;
    }
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
        Rational dot(0);
        for (std::size_t r = 0; r < a.size(); ++r) {
            dot += y[r] * a[r][c];
        }
        if (dot > 0) {
            return false;
        }
    }
    Rational yb(0);
    for (std::size_t r = 0; r < a.size(); ++r) {
        yb += y[r] * b[r];
    }
    return yb > 0;
}

}  // namespace threebox::lp
