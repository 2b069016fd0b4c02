#pragma once

#include <string>
#include <vector>

#include "adjinv/ids.hpp"
#include "adjinv/matrix.hpp"

namespace adjinv {

namespace detail {
template <class S>
S checked_quotient(const S& num, const S& den, const char* what) {
    if (!is_unit(den)) throw DegeneratePoint(std::string("vanishing denominator in ") + what);
    return num / den;
}
}  // namespace detail

/// All J_{i,j} values at one evaluation point, triangular storage.
/// Computing the table needs the adjugate of X only once.
template <class S>
class JTable {
  public:
    explicit JTable(int n) : n_(n), v_(static_cast<size_t>(n) * (n + 1) / 2) {}

    int n() const { return n_; }

    const S& at(int i, int j) const { return v_[index(i, j)]; }
    S& at(int i, int j) { return v_[index(i, j)]; }

  private:
    size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 0 || j > i - 1)
            throw IndexOutOfRange("JTable index (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return static_cast<size_t>(i) * (i - 1) / 2 + j;
    }

    int n_;
    std::vector<S> v_;
};

/// Determinant of the minor assembled from its row plan, reading Adj rows
/// from the precomputed adjugate.
template <class S>
S eval_minor(const MinorSpec& ms, const Matrix<S>& x, const Matrix<S>& adj) {
    Matrix<S> sub(ms.i, ms.i);
    for (int r = 0; r < ms.i; ++r) {
        const auto& ref = ms.row_plan[r];
        const Matrix<S>& src = (ref.source == RowSource::X) ? x : adj;
        for (int c = 0; c < ms.i; ++c) sub(r, c) = src(ref.row - 1, c);
    }
    return det(sub);
}

template <class S>
S eval_J(int n, int i, int j, const Matrix<S>& x) {
    if (x.rows() != n || x.cols() != n)
        throw IndexOutOfRange("eval_J: matrix is not n x n");
    MinorSpec ms = minor_spec(n, i, j);
    if (j == 0) {
        Matrix<S> none;
        return eval_minor(ms, x, none);
    }
    return eval_minor(ms, x, adjugate(x));
}

template <class S>
JTable<S> eval_J_table(int n, const Matrix<S>& x) {
    if (x.rows() != n || x.cols() != n)
        throw IndexOutOfRange("eval_J_table: matrix is not n x n");
    JTable<S> t(n);
    Matrix<S> adj = (n > 1) ? adjugate(x) : Matrix<S>();
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= i - 1; ++j) t.at(i, j) = eval_minor(minor_spec(n, i, j), x, adj);
    return t;
}

/// y_1 = J_{1,0};  y_i = J_{i,i-1} / J_{i-1,0} for i >= 2.
template <class S>
S y_from_table(const JTable<S>& t, int i) {
    if (i < 1 || i > t.n()) throw IndexOutOfRange("y index out of range");
    if (i == 1) return t.at(1, 0);
    return detail::checked_quotient(t.at(i, i - 1), t.at(i - 1, 0), "y_i");
}

/// Y_{i,j} = J_{i,j} * y_{n-i+j+1} / (J_{i-1,j} * y_i).
template <class S>
S Y_from_table(const JTable<S>& t, int i, int j) {
    const int n = t.n();
    if (i < 2 || i > n || j < 0 || j > i - 2) throw IndexOutOfRange("Y index out of range");
    S num = t.at(i, j) * y_from_table(t, n - i + j + 1);
    S den = t.at(i - 1, j) * y_from_table(t, i);
    return detail::checked_quotient(num, den, "Y_{i,j}");
}

/// J'_{i,j} = J_{i,j} / J_{i-1,j} for 3 <= i <= n, 1 <= j <= i-2;
/// J'_{i,j} = J_{i,j} otherwise.
template <class S>
S Jprime_from_table(const JTable<S>& t, int i, int j) {
    if (!valid_id(t.n(), id_Jp(i, j))) throw IndexOutOfRange("J' index out of range");
    if (i >= 3 && j >= 1 && j <= i - 2)
        return detail::checked_quotient(t.at(i, j), t.at(i - 1, j), "J'_{i,j}");
    return t.at(i, j);
}

/// J''_{i,0} = J'_{i,0} / J'_{i-1,0};  J''_{i,j} = J'_{i,j} for j >= 1.
template <class S>
S Jdoubleprime_from_table(const JTable<S>& t, int i, int j) {
    if (!valid_id(t.n(), id_Jpp(i, j))) throw IndexOutOfRange("J'' index out of range");
    if (j == 0)
        return detail::checked_quotient(Jprime_from_table(t, i, 0), Jprime_from_table(t, i - 1, 0),
                                        "J''_{i,0}");
    return Jprime_from_table(t, i, j);
}

template <class S>
S eval_id_from_table(const InvariantId& id, const JTable<S>& t) {
    if (!valid_id(t.n(), id)) throw IndexOutOfRange("invariant id invalid for n: " + to_string(id));
    switch (id.kind) {
        case GenKind::J: return t.at(id.i, id.j);
        case GenKind::JPrime: return Jprime_from_table(t, id.i, id.j);
        case GenKind::JDoublePrime: return Jdoubleprime_from_table(t, id.i, id.j);
        case GenKind::SmallY: return y_from_table(t, id.i);
        case GenKind::BigY: return Y_from_table(t, id.i, id.j);
    }
    throw IndexOutOfRange("unreachable invariant kind");
}

template <class S>
S eval_y(int n, int i, const Matrix<S>& x) {
    return y_from_table(eval_J_table(n, x), i);
}

template <class S>
S eval_Y(int n, int i, int j, const Matrix<S>& x) {
    return Y_from_table(eval_J_table(n, x), i, j);
}

template <class S>
S eval_id(int n, const InvariantId& id, const Matrix<S>& x) {
    return eval_id_from_table(id, eval_J_table(n, x));
}

}  // namespace adjinv
