#pragma once

#include <string>
#include <vector>

#include "adjinv/ids.hpp"
#include "adjinv/rational.hpp"

namespace adjinv {

/// Character of the diagonal torus, written multiplicatively as a Laurent
/// monomial a_1^{e_1} ... a_n^{e_n} in the diagonal entries. Stored as the
/// exponent vector e.
class WeightVector {
  public:
    WeightVector() = default;
    explicit WeightVector(int n) : e_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw IndexOutOfRange("WeightVector: negative size");
    }

    int size() const { return static_cast<int>(e_.size()); }

    long long& at(int k) {  // 1-based
        check(k);
        return e_[static_cast<std::size_t>(k - 1)];
    }
    long long at(int k) const {
        check(k);
        return e_[static_cast<std::size_t>(k - 1)];
    }

    bool is_zero() const {
        for (long long v : e_)
            if (v != 0) return false;
        return true;
    }

    WeightVector& operator+=(const WeightVector& o) {
        match(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    WeightVector& operator-=(const WeightVector& o) {
        match(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }

    const std::vector<long long>& exponents() const { return e_; }

    /// Value of the character at a diagonal point (a_1, ..., a_n).
    Rational eval(const std::vector<Rational>& a) const {
        if (static_cast<int>(a.size()) != size())
            throw IndexOutOfRange("WeightVector::eval: size mismatch");
        Rational r(1);
        for (std::size_t k = 0; k < e_.size(); ++k) r *= pow(a[k], e_[k]);
        return r;
    }

    /// "(e_1, ..., e_n)"
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) s += ", ";
            s += std::to_string(e_[k]);
        }
        return s + ")";
    }

    /// Laurent monomial in a_1..a_n, e.g. "a1*a2*a3^-2"; "1" when trivial.
    std::string monomial() const {
        std::string s;
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (e_[k] == 0) continue;
            if (!s.empty()) s += "*";
            s += "a" + std::to_string(k + 1);
            if (e_[k] != 1) s += "^" + std::to_string(e_[k]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    void check(int k) const {
        if (k < 1 || k > size()) throw IndexOutOfRange("WeightVector index");
    }
    void match(const WeightVector& o) const {
        if (o.size() != size()) throw IndexOutOfRange("WeightVector size mismatch");
    }

    std::vector<long long> e_;
};

inline WeightVector unit_weight(int n, int k) {
    WeightVector w(n);
    w.at(k) = 1;
    return w;
}

/// Weight of J_{i,j} under f(X) -> f(h^{-1} X h): the submatrix takes rows
/// n-i+j+1..n of X and n-j+1..n of the adjugate, and columns 1..i; each X row
/// r contributes a_r^{-1}, each adjugate row r contributes a_r (times det,
/// whose weight is trivial, j times over cancels), each column c contributes
/// a_c.
inline WeightVector weight_J(int n, int i, int j) {
    if (!valid_id(n, id_J(i, j))) throw IndexOutOfRange("weight_J: bad (i, j)");
    WeightVector w(n);
    for (int c = 1; c <= i; ++c) w.at(c) += 1;
    for (int r = n - i + j + 1; r <= n; ++r) w.at(r) -= 1;
    for (int r = n - j + 1; r <= n; ++r) w.at(r) -= 1;
    return w;
}

/// Weight of any generator at any stage, accumulated through the chain
/// definitions (quotients subtract, products add).
inline WeightVector weight_id(int n, const InvariantId& id) {
    if (!valid_id(n, id)) throw IndexOutOfRange("weight_id: invalid id");
    const int i = id.i, j = id.j;
    switch (id.kind) {
        case GenKind::J:
            return weight_J(n, i, j);
        case GenKind::JPrime:
            if (i >= 3 && j >= 1 && j <= i - 2)
                return weight_J(n, i, j) - weight_J(n, i - 1, j);
            return weight_J(n, i, j);
        case GenKind::SmallY:
            if (i == 1) return weight_id(n, id_Jp(1, 0));
            return weight_id(n, id_Jp(i, i - 1)) - weight_id(n, id_Jp(i - 1, 0));
        case GenKind::JDoublePrime:
            if (j == 0) {
                WeightVector prev = (i - 1 >= 2) ? weight_id(n, id_Jp(i - 1, 0))
                                                 : weight_id(n, id_y(1));
                return weight_id(n, id_Jp(i, 0)) - prev;
            }
            return weight_id(n, id_Jp(i, j));
        case GenKind::BigY:
            return weight_id(n, id_Jpp(i, j)) + weight_id(n, id_y(n - i + j + 1)) -
                   weight_id(n, id_y(i));
    }
    throw IndexOutOfRange("weight_id: unknown kind");
}

/// Weight of a generator belonging to the given chain stage.
inline WeightVector weight_stage(int n, Stage stage, const InvariantId& id) {
    bool member = false;
    for (const auto& other : stage_system(n, stage))
        if (other == id) {
            member = true;
            break;
        }
    if (!member) throw IndexOutOfRange("weight_stage: id not part of the stage system");
    return weight_id(n, id);
}

/// Weights of the full stage system, aligned with stage_system(n, stage).
inline std::vector<WeightVector> weight_system(int n, Stage stage) {
    std::vector<WeightVector> out;
    for (const auto& id : stage_system(n, stage)) out.push_back(weight_id(n, id));
    return out;
}

}  // namespace adjinv
