#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "adjinv/weights.hpp"

namespace adjinv {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;  // row-major

inline IntMat int_zero(int rows, int cols) {
    return IntMat(static_cast<std::size_t>(rows), IntVec(static_cast<std::size_t>(cols), Int(0)));
}

inline IntMat int_identity(int n) {
    IntMat m = int_zero(n, n);
    for (int k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

/// Extended Euclid: returns (g, s, t) with g = s*a + t*b, g >= 0.
inline std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    Int s0(1), t0(0), s1(0), t1(1);
    while (b != 0) {
        Int q = a / b;  // truncated; any consistent quotient works here
        Int r = a - q * b;
        a = b;
        b = r;
        Int s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        t0 = t1;
        s1 = s2;
        t1 = t2;
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

/// n x m integer weight matrix of a stage system: column k is the exponent
/// vector of the weight of stage_system(n, stage)[k].
inline IntMat weight_matrix(int n, Stage stage) {
    auto ws = weight_system(n, stage);
    IntMat a = int_zero(n, static_cast<int>(ws.size()));
    for (std::size_t c = 0; c < ws.size(); ++c)
        for (int r = 1; r <= n; ++r) a[static_cast<std::size_t>(r - 1)][c] = ws[c].at(r);
    return a;
}

namespace detail {

inline void col_axpy(IntMat& m, int dst, int src, const Int& q) {
    for (auto& row : m) row[static_cast<std::size_t>(dst)] += q * row[static_cast<std::size_t>(src)];
}

// columns dst := s*dst + t*src, src := u*dst_old + v*src  (2x2 unimodular mix)
inline void col_mix(IntMat& m, int dst, int src, const Int& s, const Int& t, const Int& u,
                    const Int& v) {
    for (auto& row : m) {
        Int a = row[static_cast<std::size_t>(dst)], b = row[static_cast<std::size_t>(src)];
        row[static_cast<std::size_t>(dst)] = s * a + t * b;
        row[static_cast<std::size_t>(src)] = u * a + v * b;
    }
}

inline void col_negate(IntMat& m, int c) {
    for (auto& row : m) row[static_cast<std::size_t>(c)] = -row[static_cast<std::size_t>(c)];
}

inline Int floor_div(const Int& a, const Int& b) {  // b > 0
    Int q = a / b, r = a % b;
    if (r < 0) q -= 1;
    return q;
}

}  // namespace detail

struct ColumnHnf {
    IntMat h;                // a * u = h, column echelon
    IntMat u;                // unimodular m x m
    std::vector<int> pivot;  // pivot[c] = row of column c's pivot, for c < rank
    int rank = 0;
};

/// Column-style Hermite normal form by unimodular column operations:
/// pivot rows strictly increase column by column, pivots are positive, and
/// in each pivot row the entries of earlier columns are reduced into
/// [0, pivot). Columns rank..m-1 of h are zero, so the same columns of u are
/// a basis of the integer kernel of a.
inline ColumnHnf column_hnf(IntMat a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    ColumnHnf out;
    out.u = int_identity(cols);
    int p = 0;  // next pivot column
    for (int r = 0; r < rows && p < cols; ++r) {
        int lead = -1;
        for (int c = p; c < cols; ++c)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        if (lead != p) {
            for (auto& row : a) std::swap(row[static_cast<std::size_t>(p)], row[static_cast<std::size_t>(lead)]);
            for (auto& row : out.u) std::swap(row[static_cast<std::size_t>(p)], row[static_cast<std::size_t>(lead)]);
        }
        for (int c = p + 1; c < cols; ++c) {
            const Int& av = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
            const Int& bv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (bv == 0) continue;
            auto [g, s, t] = xgcd(av, bv);
            Int u2 = -bv / g, v2 = av / g;
            detail::col_mix(a, p, c, s, t, u2, v2);
            detail::col_mix(out.u, p, c, s, t, u2, v2);
        }
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] < 0) {
            detail::col_negate(a, p);
            detail::col_negate(out.u, p);
        }
        const Int& piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
        for (int c = 0; c < p; ++c) {
            Int q = detail::floor_div(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], piv);
            if (q != 0) {
                detail::col_axpy(a, c, p, -q);
                detail::col_axpy(out.u, c, p, -q);
            }
        }
        out.pivot.push_back(r);
        ++p;
    }
    out.rank = p;
    out.h = std::move(a);
    return out;
}

/// Rank of an integer matrix (over Q; HNF pivots).
inline int int_rank(const IntMat& a) { return column_hnf(a).rank; }

/// Canonical basis (column echelon HNF, as above) of {v in Z^m : a v = 0},
/// returned as an m x k matrix whose columns are the basis vectors.
inline IntMat kernel_lattice(const IntMat& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    ColumnHnf hnf = column_hnf(a);
    IntMat raw = int_zero(cols, cols - hnf.rank);
    for (int c = hnf.rank; c < cols; ++c)
        for (int r = 0; r < cols; ++r)
            raw[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - hnf.rank)] =
                hnf.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    // canonicalize the basis itself
    return column_hnf(raw).h;
}

/// Integer coordinates of v in the column span of a column-echelon basis,
/// or nullopt when v is outside the lattice.
inline std::optional<IntVec> lattice_coordinates(const IntMat& basis, IntVec v) {
    const int rows = static_cast<int>(basis.size());
    if (static_cast<int>(v.size()) != rows) throw IndexOutOfRange("lattice_coordinates: size");
    const int cols = rows ? static_cast<int>(basis[0].size()) : 0;
    IntVec coords;
    int r = 0;
    for (int c = 0; c < cols; ++c) {
        int pr = -1;
        for (int k = 0; k < rows; ++k)
            if (basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] != 0) {
                pr = k;
                break;
            }
        if (pr < 0) continue;  // zero column carries no coordinate
        for (; r < pr; ++r)
            if (v[static_cast<std::size_t>(r)] != 0) return std::nullopt;
        const Int& piv = basis[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
        if (v[static_cast<std::size_t>(pr)] % piv != 0) return std::nullopt;
        Int q = v[static_cast<std::size_t>(pr)] / piv;
        for (int k = 0; k < rows; ++k)
            v[static_cast<std::size_t>(k)] -= q * basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        coords.push_back(q);
    }
    for (int k = 0; k < rows; ++k)
        if (v[static_cast<std::size_t>(k)] != 0) return std::nullopt;
    return coords;
}

inline bool lattice_contains(const IntMat& basis, const IntVec& v) {
    return lattice_coordinates(basis, v).has_value();
}

}  // namespace adjinv
