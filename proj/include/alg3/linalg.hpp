#pragma once

#include <optional>
#include <vector>

#include "alg3/errors.hpp"
#include "alg3/ext_scalar.hpp"
#include "alg3/scalar.hpp"

namespace alg3 {

inline bool field_is_zero(const Scalar& x) { return x.is_zero(); }
inline bool field_is_zero(const ExtScalar& x) { return x.is_zero(); }
inline Scalar field_inverse(const Scalar& x) { return x.inverse(); }
inline ExtScalar field_inverse(const ExtScalar& x) { return x.inverse(); }

/// Dense row-major matrix over an exact field element type.
template <class F>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}

    F& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    std::vector<F> row(int i) const {
        return std::vector<F>(a.begin() + static_cast<size_t>(i) * cols,
                              a.begin() + static_cast<size_t>(i + 1) * cols);
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (size_t k = 0; k < x.a.size(); ++k)
            if (!field_is_zero(x.a[k] - y.a[k])) return false;
        return true;
    }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product");
    Mat<F> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (field_is_zero(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

template <class F>
F mat_det(Mat<F> m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
    F det(1);
    for (int col = 0; col < m.cols; ++col) {
        int pivot = -1;
        for (int r = col; r < m.rows; ++r)
            if (!field_is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return F(0);
        if (pivot != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        F inv = field_inverse(m.at(col, col));
        for (int r = col + 1; r < m.rows; ++r) {
            if (field_is_zero(m.at(r, col))) continue;
            F factor = m.at(r, col) * inv;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
        }
    }
    return det;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!field_is_zero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        F inv = field_inverse(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || field_is_zero(m.at(i, c))) continue;
            F factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int mat_rank(Mat<F> m) {
    return static_cast<int>(rref(m).size());
}

/// Basis of the right kernel {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols, F(0));
        v[c] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Mat<F> mat_inverse(const Mat<F>& m) {
    if (m.rows != m.cols) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows;
    Mat<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) throw SingularMatrix{};
    Mat<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// One exact solution of m x = b, if the system is consistent.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw DimensionMismatch("solve rhs");
    Mat<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<F> x(m.cols, F(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

template <class F>
std::vector<F> mat_apply(const Mat<F>& m, const std::vector<F>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw DimensionMismatch("matrix apply");
    std::vector<F> y(m.rows, F(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

inline Mat<ExtScalar> lift_mat(const Mat<Scalar>& m) {
    Mat<ExtScalar> e(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) e.at(i, j) = ExtScalar(m.at(i, j));
    return e;
}

inline std::vector<ExtScalar> lift_vec(const std::vector<Scalar>& v) {
    return std::vector<ExtScalar>(v.begin(), v.end());
}

}  // namespace alg3
