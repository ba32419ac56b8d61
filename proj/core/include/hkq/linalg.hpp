#ifndef HKQ_LINALG_HPP
#define HKQ_LINALG_HPP

#include "hkq/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hkq {

// Dense exact linear algebra over a field K. Row-major.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c)
        : rows_(r), cols_(c), data_(r * c, field_traits<K>::zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<K>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    // In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t prow = 0;
        for (std::size_t col = 0; col < cols_ && prow < rows_; ++col) {
            std::size_t sel = prow;
            while (sel < rows_ && field_traits<K>::is_zero(at(sel, col))) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, prow);
            K inv = field_traits<K>::one() / at(prow, col);
            for (std::size_t j = col; j < cols_; ++j) at(prow, j) = at(prow, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == prow || field_traits<K>::is_zero(at(i, col))) continue;
                K f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(prow, j);
            }
            pivots.push_back(col);
            ++prow;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of the right nullspace, one vector per non-pivot column.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, field_traits<K>::zero());
            v[free] = field_traits<K>::one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -m.at(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solve M x = b; empty optional when inconsistent. Free variables set to 0.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        for (auto p : pivots)
            if (p == cols_) return std::nullopt;
        std::vector<K> x(cols_, field_traits<K>::zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
        return x;
    }

  private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<K> data_;
};

// Determinant of a square rational matrix by fraction-free-ish elimination.
template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
    K det = field_traits<K>::one();
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && field_traits<K>::is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return field_traits<K>::zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        K inv = field_traits<K>::one() / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (field_traits<K>::is_zero(m.at(i, col))) continue;
            K f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

}  // namespace hkq

#endif
