// Dense exact linear algebra over a field (Rational or GFp): Gaussian
// elimination to reduced row echelon form, rank, kernel bases, and solving.
// No floating point, no modular shortcuts; correctness over speed at desk
// scale.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "superpoint/superalg.hpp"

namespace superpoint {

template <class C>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, C fill = C(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    C& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const C& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    size_t rows_, cols_;
    std::vector<C> data_;
};

// In-place reduction to reduced row echelon form; returns the pivot columns.
template <class C>
std::vector<size_t> rref(Matrix<C>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && coeff_is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        C inv = C(1) / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || coeff_is_zero(m(i, col))) continue;
            C factor = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class C>
size_t rank(Matrix<C> m) {
    return rref(m).size();
}

// Basis of the kernel of m (as column vectors), via the free columns of the
// reduced form.
template <class C>
std::vector<std::vector<C>> kernel_basis(Matrix<C> m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<C>> basis;
    for (size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<C> v(m.cols(), C(0));
        v[freec] = C(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b, or nullopt when inconsistent.
template <class C>
std::optional<std::vector<C>> solve(const Matrix<C>& a, const std::vector<C>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix<C> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<C> x(a.cols(), C(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

template <class C>
std::vector<C> matvec(const Matrix<C>& a, const std::vector<C>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matvec: size mismatch");
    std::vector<C> y(a.rows(), C(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!coeff_is_zero(a(i, j))) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace superpoint
