#pragma once

#include <string>

#include "adjinv/rational.hpp"

namespace adjinv {

/// First-order dual scalar a + eps*a' with eps^2 = 0, over Rational.
///
/// Carries exactly one derivative slot; Jacobians are assembled one
/// coordinate direction at a time.
struct DualRational {
    Rational value;
    Rational deriv;

    DualRational() = default;
    DualRational(int v) : value(v) {}                 // NOLINT(google-explicit-constructor)
    DualRational(Rational v) : value(std::move(v)) {} // NOLINT(google-explicit-constructor)
    DualRational(Rational v, Rational d) : value(std::move(v)), deriv(std::move(d)) {}

    /// Seed for differentiation in one coordinate: x0 + eps*1.
    static DualRational variable(Rational v) { return {std::move(v), Rational(1)}; }

    bool is_zero() const { return value.is_zero() && deriv.is_zero(); }

    DualRational& operator+=(const DualRational& o) {
        value += o.value;
        deriv += o.deriv;
        return *this;
    }
    DualRational& operator-=(const DualRational& o) {
        value -= o.value;
        deriv -= o.deriv;
        return *this;
    }
    DualRational& operator*=(const DualRational& o) {
        deriv = value * o.deriv + deriv * o.value;
        value *= o.value;
        return *this;
    }
    DualRational& operator/=(const DualRational& o) {
        if (o.value.is_zero()) throw DivisionByZero("dual division by a non-unit (zero value part)");
        // (a + eps a') / (b + eps b') = a/b + eps (a'b - ab') / b^2
        deriv = (deriv * o.value - value * o.deriv) / (o.value * o.value);
        value /= o.value;
        return *this;
    }

    friend DualRational operator+(DualRational a, const DualRational& b) { return a += b; }
    friend DualRational operator-(DualRational a, const DualRational& b) { return a -= b; }
    friend DualRational operator*(DualRational a, const DualRational& b) { return a *= b; }
    friend DualRational operator/(DualRational a, const DualRational& b) { return a /= b; }
    DualRational operator-() const { return {-value, -deriv}; }

    friend bool operator==(const DualRational& a, const DualRational& b) {
        return a.value == b.value && a.deriv == b.deriv;
    }
    friend bool operator!=(const DualRational& a, const DualRational& b) { return !(a == b); }

    std::string to_string() const { return value.to_string() + " + eps*" + deriv.to_string(); }
};

/// True when division by s is defined for the scalar type.
inline bool is_unit(const Rational& s) { return !s.is_zero(); }
inline bool is_unit(const DualRational& s) { return !s.value.is_zero(); }

}  // namespace adjinv
