#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "adjinv/errors.hpp"

namespace adjinv {

using Int = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact arbitrary-precision rational scalar.
///
/// Always kept in canonical form: gcd(|num|, den) = 1 and den > 0, so
/// equality is structural. Serializes as "p/q", or "p" when q = 1.
class Rational {
  public:
    Rational() = default;
    Rational(int v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(long long v) : v_(v) {}            // NOLINT(google-explicit-constructor)
    Rational(const Int& v) : v_(v) {}           // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        // cpp_rational's two-argument constructor reduces by the gcd but
        // keeps the denominator's sign; move it to the numerator
        v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    std::string to_string() const {
        if (denominator() == 1) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    /// Parses "p/q" or "p" with an optional leading '-'. Throws
    /// std::invalid_argument on anything else (including q = 0).
    static Rational parse(std::string_view s) {
        auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
        std::string_view num = s, den;
        if (auto pos = s.find('/'); pos != std::string_view::npos) {
            num = s.substr(0, pos);
            den = s.substr(pos + 1);
            if (den.empty()) fail();
        }
        auto parse_int = [&](std::string_view t, bool allow_sign) -> Int {
            if (t.empty()) fail();
            bool neg = false;
            if (allow_sign && t.front() == '-') {
                neg = true;
                t.remove_prefix(1);
                if (t.empty()) fail();
            }
            Int v = 0;
            for (char c : t) {
                if (c < '0' || c > '9') fail();
                v = v * 10 + (c - '0');
            }
            return neg ? Int(-v) : v;
        };
        Int p = parse_int(num, true);
        if (den.data() == nullptr) return Rational(p);
        Int q = parse_int(den, false);
        if (q == 0) fail();
        return Rational(p, q);
    }

  private:
    BigRat v_;
};

/// a^e for integer e; negative exponents require a != 0.
inline Rational pow(const Rational& a, long long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    if (invert && a.is_zero()) throw DivisionByZero("zero raised to a negative power");
    unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                  : static_cast<unsigned long long>(e);
    Rational acc(1), base = a;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return invert ? Rational(1) / acc : acc;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace adjinv
