#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbicat {

/// Dense row-major matrix over an exact field type.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const F& fill = F(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> operator*(const std::vector<F>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<F> y(rows_, F(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
struct Echelon {
    Matrix<F> reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivots are the first nonzero entry in each column.
template <class F>
Echelon<F> row_reduce(Matrix<F> a) {
    Echelon<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == F(0)) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        const F inv = F(1) / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == F(0)) continue;
            const F f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    return row_reduce(a).pivots.size();
}

/// Basis of the right null space, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& a) {
    const auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(a.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
    return x;
}

/// Determinant by fraction-carrying elimination.
template <class F>
F determinant(Matrix<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    F det(1);
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == F(0)) ++p;
        if (p == n) return F(0);
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const F inv = F(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == F(0)) continue;
            const F f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

/// Determinants of the leading k x k submatrices, k = 1..n.
template <class F>
std::vector<F> leading_principal_minors(const Matrix<F>& a) {
    std::vector<F> minors;
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        Matrix<F> sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub(r, c) = a(r, c);
        minors.push_back(determinant(std::move(sub)));
    }
    return minors;
}

} // namespace orbicat
