#pragma once

// Dense exact linear algebra over Q(w): kernels and determinants by
// Gauss-Jordan elimination.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "arches/exact.hpp"

namespace arches {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<CycloNum> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const CycloNum> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<CycloNum> apply(std::span<const CycloNum> v) const {
        std::vector<CycloNum> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycloNum> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        CycloNum inv = m(r, c).inv();
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            CycloNum f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right kernel, one vector per free column (free entry = 1).
inline std::vector<std::vector<CycloNum>> kernel(Matrix m) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycloNum>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycloNum> v(m.cols());
        v[f] = CycloNum(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline CycloNum determinant(Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::Precondition, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    CycloNum det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return CycloNum(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        CycloNum inv = m(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            CycloNum f = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!m(c, k).is_zero()) m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

/// True iff u = lambda * v for some nonzero lambda (both nonzero vectors).
inline bool proportional(std::span<const CycloNum> u, std::span<const CycloNum> v) {
    if (u.size() != v.size()) return false;
    std::size_t k = 0;
    while (k < u.size() && v[k].is_zero()) ++k;
    if (k == u.size() || u[k].is_zero()) return false;
    CycloNum lambda = u[k] / v[k];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != lambda * v[i]) return false;
    return true;
}

} // namespace arches
