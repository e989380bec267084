#pragma once

#include "autbound/error.hpp"
#include "autbound/exact/eigen_support.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace autbound {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CycloMatrix = Matrix<Cyclotomic>;
using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

inline bool is_zero_value(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Integer& x) { return sgn(x) == 0; }

template <class Scalar>
Matrix<Scalar> identity(Eigen::Index n)
{
    Matrix<Scalar> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = Scalar(i == j ? 1 : 0);
    }
    return out;
}

template <class Scalar>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols)
{
    Matrix<Scalar> out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = Scalar(0);
    }
    return out;
}

/// Product that skips zero entries of the left factor; cheaper than the
/// generic kernel for the sparse monomial matrices common here.
template <class Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
    Matrix<Scalar> out = zeros<Scalar>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero_value(a(i, k))) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                if (is_zero_value(b(k, j))) continue;
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

template <class Scalar>
Vector<Scalar> multiply(const Matrix<Scalar>& a, const Vector<Scalar>& v)
{
    if (a.cols() != v.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
    Vector<Scalar> out(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Scalar acc(0);
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero_value(a(i, k)) || is_zero_value(v(k))) continue;
            acc += a(i, k) * v(k);
        }
        out(i) = acc;
    }
    return out;
}

template <class Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (!(a(i, j) == b(i, j))) return false;
        }
    }
    return true;
}

/// Reduced row echelon form over a field, in place. Returns pivot columns.
template <class Scalar>
std::vector<Eigen::Index> row_reduce(Matrix<Scalar>& m)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < m.rows(); ++i) {
            if (!is_zero_value(m(i, c))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        Scalar inv = Scalar(1) / m(r, c);
        for (Eigen::Index k = c; k < m.cols(); ++k) {
            if (!is_zero_value(m(r, k))) m(r, k) = m(r, k) * inv;
        }
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero_value(m(i, c))) continue;
            Scalar f = m(i, c);
            for (Eigen::Index k = c; k < m.cols(); ++k) {
                if (!is_zero_value(m(r, k))) m(i, k) -= f * m(r, k);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Scalar>
Eigen::Index rank(Matrix<Scalar> m)
{
    return static_cast<Eigen::Index>(row_reduce(m).size());
}

/// Determinant over a field by elimination.
template <class Scalar>
Scalar determinant(Matrix<Scalar> m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
    const Eigen::Index n = m.rows();
    Scalar det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (!is_zero_value(m(i, c))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return Scalar(0);
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = Scalar(1) / m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (is_zero_value(m(i, c))) continue;
            Scalar f = m(i, c) * inv;
            for (Eigen::Index k = c; k < n; ++k) {
                if (!is_zero_value(m(c, k))) m(i, k) -= f * m(c, k);
            }
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer bareiss_determinant(IntMatrix m);

/// Inverse over a field. Throws DivisionByZero on a singular matrix.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix is not square");
    const Eigen::Index n = m.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = identity<Scalar>(n);
    auto pivots = row_reduce(aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1) throw DivisionByZero();
    return aug.rightCols(n);
}

/// Basis of the null space {x : m x = 0}, one vector per column.
template <class Scalar>
Matrix<Scalar> nullspace(Matrix<Scalar> m)
{
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<Scalar> out = zeros<Scalar>(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(free, k) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -m(r, free);
        ++k;
    }
    return out;
}

/// Coefficients c[0..n] of det(t I - m) with c[j] multiplying t^(n-j), so
/// c[0] = 1 and det(I - t m) = sum_j c[j] t^j. Division-free (Berkowitz).
template <class Scalar>
std::vector<Scalar> charpoly(const Matrix<Scalar>& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("charpoly: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return {Scalar(1)};
    std::vector<Scalar> vec{Scalar(1), -m(n - 1, n - 1)};
    for (Eigen::Index k = n - 2; k >= 0; --k) {
        const Eigen::Index size = n - k;
        std::vector<Scalar> diags;
        diags.reserve(size + 1);
        diags.push_back(Scalar(1));
        diags.push_back(-m(k, k));
        // d = C, then A d; each contributes -(R . d)
        std::vector<Scalar> d(size - 1);
        for (Eigen::Index i = 0; i < size - 1; ++i) d[i] = m(k + 1 + i, k);
        for (Eigen::Index step = 0; step < size - 1; ++step) {
            Scalar acc(0);
            for (Eigen::Index i = 0; i < size - 1; ++i) {
                if (!is_zero_value(d[i]) && !is_zero_value(m(k, k + 1 + i))) acc += m(k, k + 1 + i) * d[i];
            }
            diags.push_back(-acc);
            if (step + 1 < size - 1) {
                std::vector<Scalar> next(size - 1, Scalar(0));
                for (Eigen::Index i = 0; i < size - 1; ++i) {
                    for (Eigen::Index j = 0; j < size - 1; ++j) {
                        if (!is_zero_value(d[j]) && !is_zero_value(m(k + 1 + i, k + 1 + j))) {
                            next[i] += m(k + 1 + i, k + 1 + j) * d[j];
                        }
                    }
                }
                d = std::move(next);
            }
        }
        std::vector<Scalar> out(size + 1, Scalar(0));
        for (Eigen::Index i = 0; i <= size; ++i) {
            for (Eigen::Index j = 0; j <= std::min(i, size - 1); ++j) {
                if (!is_zero_value(diags[i - j]) && !is_zero_value(vec[j])) out[i] += diags[i - j] * vec[j];
            }
        }
        vec = std::move(out);
    }
    return vec;
}

}  // namespace autbound
