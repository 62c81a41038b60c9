#pragma once

#include "sbk/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace sbk {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_.at(i * cols_ + j);
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        RationalMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    /// Exact inverse; nullopt when singular.
    std::optional<RationalMatrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        const std::size_t n = rows_;
        RationalMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = 1;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && aug(piv, col) == 0) ++piv;
            if (piv == n) return std::nullopt;
            if (piv != col)
                for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(col, j), aug(piv, j));
            Rational pv = aug(col, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) /= pv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || aug(r, col) == 0) continue;
                Rational f = aug(r, col);
                for (std::size_t j = 0; j < 2 * n; ++j) aug(r, j) -= f * aug(col, j);
            }
        }
        RationalMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

/// Reduced row echelon form with deterministic pivoting (first nonzero in
/// column order). Returns pivot columns; m is reduced in place.
inline std::vector<std::size_t> rref_in_place(std::vector<std::vector<Rational>>& m,
                                              std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational pv = m[row][col];
        for (auto& x : m[row]) x /= pv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
            m[r][col] = 0;
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace detail

/// Exact rank via rational Gaussian elimination.
inline std::size_t rank(const RationalMatrix& m) {
    auto rows = detail::to_rows(m);
    return detail::rref_in_place(rows, m.cols()).size();
}

/// Basis of {v : Mv = 0}; each vector verified exactly against M.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    auto rows = detail::to_rows(m);
    auto pivots = detail::rref_in_place(rows, m.cols());
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (pivot_set.count(free_col)) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
            if (s != 0) throw std::logic_error("nullspace residual nonzero");
        }
    return basis;
}

struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> solution;  // valid iff consistent
};

/// Any exact solution of Mv = b, or the inconsistency verdict. Solutions are
/// verified by substitution before being returned.
inline LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs size mismatch");
    auto rows = detail::to_rows(m);
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i].push_back(b[i]);
    auto pivots = detail::rref_in_place(rows, m.cols() + 1);
    LinearSolution out;
    if (!pivots.empty() && pivots.back() == m.cols()) return out;  // 0 = 1 row
    out.consistent = true;
    out.solution.assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = rows[r][m.cols()];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * out.solution[j];
        if (s != b[i]) throw std::logic_error("linear solve residual nonzero");
    }
    return out;
}

}  // namespace sbk
