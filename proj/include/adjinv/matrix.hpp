#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "adjinv/dual.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/rational.hpp"

namespace adjinv {

/// Dense row-major matrix over an exact scalar (Rational or DualRational).
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const S& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<S> e_;
};

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix<S> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == S(0)) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <class S>
Matrix<S> operator*(const S& t, const Matrix<S>& m) {
    Matrix<S> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = t * m(i, j);
    return r;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& m, const S& t) {
    return t * m;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
    Matrix<S> r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

template <class S>
S trace(const Matrix<S>& m) {
    if (!m.is_square()) throw NonSquare("trace of non-square matrix");
    S t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Fraction-free Bareiss determinant: clears denominators per row, then
/// eliminates over the integers. Controls coefficient blow-up.
inline Rational det_bareiss(const Matrix<Rational>& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;  // product of the row denominator-clearing factors
    for (int r = 0; r < n; ++r) {
        Int l = 1;
        for (int c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, m(r, c).denominator());
        for (int c = 0; c < n; ++c) a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
        scale *= l;
    }
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact by Sylvester
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1], scale);
}

/// Division-free determinant via Laplace expansion memoized over column
/// subsets; valid over any commutative ring, so it covers dual scalars.
template <class S>
S det_division_free(const Matrix<S>& m) {
    const int n = m.rows();
    if (n == 0) return S(1);
    if (n > 20) throw std::length_error("division-free determinant limited to n <= 20");
    std::vector<S> d(size_t(1) << n);
    d[0] = S(1);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int r = std::popcount(mask) - 1;  // expand along the last row of the submatrix
        S acc(0);
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!((mask >> c) & 1u)) continue;
            if (!(m(r, c) == S(0))) {
                S term = m(r, c) * d[mask ^ (1u << c)];
                if (((r + pos) & 1) == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++pos;
        }
        d[mask] = std::move(acc);
    }
    return d[full];
}

template <class S>
S det(const Matrix<S>& m) {
    if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
    if constexpr (std::is_same_v<S, Rational>)
        return det_bareiss(m);
    else
        return det_division_free(m);
}

/// Classical adjugate, entrywise from (n-1)x(n-1) cofactors. Defined for
/// singular matrices as well; satisfies m * adjugate(m) = det(m) * I.
template <class S>
Matrix<S> adjugate(const Matrix<S>& m) {
    if (!m.is_square()) throw NonSquare("adjugate of non-square matrix");
    const int n = m.rows();
    Matrix<S> adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = S(1);
        return adj;
    }
    Matrix<S> minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int mr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int mc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = m(r, c);
                    ++mc;
                }
                ++mr;
            }
            S cof = det(minor);
            adj(j, i) = (((i + j) & 1) == 0) ? cof : -cof;  // transpose of the cofactor matrix
        }
    }
    return adj;
}

/// Inverse as adjugate / det.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.is_square()) throw NonSquare("inverse of non-square matrix");
    S d = det(m);
    if (!is_unit(d)) throw SingularConjugator("matrix with zero determinant is not invertible");
    Matrix<S> adj = adjugate(m);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) adj(i, j) = adj(i, j) / d;
    return adj;
}

/// Adjoint action g X g^{-1}.
template <class S>
Matrix<S> conjugate(const Matrix<S>& g, const Matrix<S>& x) {
    if (!g.is_square() || !x.is_square() || g.rows() != x.rows())
        throw std::invalid_argument("conjugation shape mismatch");
    return g * x * inverse(g);
}

/// g^{-1} X g, i.e. the adjoint action of g^{-1}.
template <class S>
Matrix<S> conjugate_by_inverse(const Matrix<S>& g, const Matrix<S>& x) {
    if (!g.is_square() || !x.is_square() || g.rows() != x.rows())
        throw std::invalid_argument("conjugation shape mismatch");
    return inverse(g) * x * g;
}

/// Exact rank over the rationals by Gaussian elimination.
inline int rank(Matrix<Rational> m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

template <class S>
std::string to_string(const Matrix<S>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace adjinv
