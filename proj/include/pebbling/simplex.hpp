#ifndef PEBBLING_SIMPLEX_HPP
#define PEBBLING_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/rational.hpp"

namespace pebbling {

class LpUnbounded : public std::runtime_error {
public:
    explicit LpUnbounded(std::size_t column)
        : LpUnbounded(column, "linear program is unbounded along variable " + std::to_string(column)) {}
    LpUnbounded(std::size_t column, const std::string& what) : std::runtime_error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// max c.x subject to A x <= b, x >= 0, with b >= 0.
struct LinearProgram {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

/// Optimal primal x and dual y (y >= 0, A^T y >= c, b.y = c.x).
struct LpSolution {
    Rational optimum;
    std::vector<Rational> x;
    std::vector<Rational> y;
    std::size_t pivots = 0;
};

/// True when y proves c.x <= b.y is the optimum for x.
inline bool verify_duality(const LinearProgram& lp, const LpSolution& s) {
    const std::size_t m = lp.b.size(), n = lp.c.size();
    if (s.x.size() != n || s.y.size() != m) return false;
    Rational primal = 0, dual = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (s.x[j] < 0) return false;
        primal += lp.c[j] * s.x[j];
        Rational column = 0;
        for (std::size_t i = 0; i < m; ++i) column += lp.a[i][j] * s.y[i];
        if (column < lp.c[j]) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (s.y[i] < 0) return false;
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j) row += lp.a[i][j] * s.x[j];
        if (row > lp.b[i]) return false;
        dual += lp.b[i] * s.y[i];
    }
    return primal == dual && primal == s.optimum;
}

/// Dense tableau simplex in exact arithmetic with Bland's rule. The origin
/// is feasible because b >= 0, so no first phase is needed.
inline LpSolution solve_lp(const LinearProgram& lp) {
    const std::size_t m = lp.b.size(), n = lp.c.size();
    for (const auto& row : lp.a)
        if (row.size() != n) throw std::invalid_argument("constraint row has the wrong width");
    if (lp.a.size() != m) throw std::invalid_argument("constraint count does not match right-hand side");
    for (const auto& bi : lp.b)
        if (bi < 0) throw std::invalid_argument("right-hand side must be nonnegative");

    // Columns 0..n-1 structural, n..n+m-1 slack; last column is the rhs.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = lp.b[i];
        basis[i] = n + i;
    }
    // Reduced-cost row: z_j - c_j; optimal once all entries are >= 0.
    std::vector<Rational> z(width);
    for (std::size_t j = 0; j < n; ++j) z[j] = -lp.c[j];

    LpSolution out;
    for (;;) {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (!enter) break;
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][*enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][*enter];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave) throw LpUnbounded(*enter);

        auto& prow = t[*leave];
        const Rational pivot = prow[*enter];
        for (auto& e : prow) e /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == *leave || t[i][*enter] == 0) continue;
            const Rational factor = t[i][*enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * prow[j];
        }
        if (z[*enter] != 0) {
            const Rational factor = z[*enter];
            for (std::size_t j = 0; j < width; ++j) z[j] -= factor * prow[j];
        }
        basis[*leave] = *enter;
        ++out.pivots;
    }

    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = t[i][width - 1];
    out.y.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) out.y[i] = z[n + i];
    out.optimum = z[width - 1];
    if (!verify_duality(lp, out)) throw std::logic_error("simplex produced an uncertified optimum");
    return out;
}

}  // namespace pebbling

#endif  // PEBBLING_SIMPLEX_HPP
