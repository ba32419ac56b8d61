#include "hkq/polyhedron.hpp"

#include <cstddef>

namespace hkq {

// Exact rational phase-one simplex with Bland's rule.
//
// The system {A x >= b, C x = e} is rewritten with x = x+ - x- and slack
// variables into standard form {M y = r, y >= 0}, then an artificial basis
// is driven to zero cost.
namespace {

class Tableau {
  public:
    // columns: structural variables first, artificials appended later
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols),
        a_(rows, std::vector<Rational>(cols + 1, Rational(0))), basis_(rows, 0) {}

    std::vector<Rational>& row(std::size_t i) { return a_[i]; }
    Rational& rhs(std::size_t i) { return a_[i][n_]; }

    // minimize sum of artificial variables; returns true when optimum is 0
    bool phase_one(std::size_t first_artificial) {
        // cost row: z = sum of artificial rows (each artificial is basic)
        std::vector<Rational> cost(n_ + 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= first_artificial) {
                for (std::size_t j = 0; j <= n_; ++j) cost[j] += a_[i][j];
            }
        }
        while (true) {
            // Bland: smallest index with positive reduced cost among
            // non-artificial columns
            std::size_t enter = n_;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (cost[j] > 0) { enter = j; break; }
            }
            if (enter == n_) break;
            // ratio test, Bland tie-break on basis index
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = a_[i][n_] / a_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) break;  // unbounded cost direction; cannot happen here
            pivot(leave, enter, cost);
        }
        return cost[n_] == 0;
    }

    void set_basis(std::size_t i, std::size_t col) { basis_[i] = col; }
    std::size_t basis(std::size_t i) const { return basis_[i]; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

  private:
    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& cost) {
        Rational inv = Rational(1) / a_[r][c];
        for (std::size_t j = 0; j <= n_; ++j) a_[r][j] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rational f = a_[i][c];
            for (std::size_t j = 0; j <= n_; ++j) a_[i][j] -= f * a_[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j <= n_; ++j) cost[j] -= f * a_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t m_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible_point(const LinearSystem& sys) {
    const std::size_t n = static_cast<std::size_t>(sys.n);
    const std::size_t n_ge = sys.ge_lhs.size();
    const std::size_t n_eq = sys.eq_lhs.size();
    const std::size_t rows = n_ge + n_eq;
    if (rows == 0) return std::vector<Rational>(n, Rational(0));

    // structural columns: x+ (n), x- (n), slacks s (n_ge); artificials appended
    const std::size_t structural = 2 * n + n_ge;
    const std::size_t total = structural + rows;
    Tableau t(rows, total);

    for (std::size_t i = 0; i < n_ge; ++i) {
        auto& r = t.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = sys.ge_lhs[i][j];
            r[n + j] = -sys.ge_lhs[i][j];
        }
        r[2 * n + i] = Rational(-1);  // a.x - s = rhs, s >= 0
        t.rhs(i) = sys.ge_rhs[i];
    }
    for (std::size_t i = 0; i < n_eq; ++i) {
        auto& r = t.row(n_ge + i);
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = sys.eq_lhs[i][j];
            r[n + j] = -sys.eq_lhs[i][j];
        }
        t.rhs(n_ge + i) = sys.eq_rhs[i];
    }
    // flip rows to nonnegative rhs, install artificial basis
    for (std::size_t i = 0; i < rows; ++i) {
        if (t.rhs(i) < 0) {
            auto& r = t.row(i);
            for (auto& v : r) v = -v;
        }
        t.row(i)[structural + i] = Rational(1);
        t.set_basis(i, structural + i);
    }
    if (!t.phase_one(structural)) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t b = t.basis(i);
        if (b >= structural) continue;  // degenerate artificial at zero
        if (b < n) x[b] += t.rhs(i);
        else if (b < 2 * n) x[b - n] -= t.rhs(i);
    }
    return x;
}

}  // namespace hkq
