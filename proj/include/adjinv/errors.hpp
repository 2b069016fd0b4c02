#pragma once

#include <stdexcept>
#include <string>

namespace adjinv {

/// Division with a zero divisor in exact scalar arithmetic.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A square-matrix operation was asked of a non-square matrix.
struct NonSquare : std::domain_error {
    explicit NonSquare(const std::string& what) : std::domain_error(what) {}
};

/// Conjugation (or inversion) by a matrix with zero determinant.
struct SingularConjugator : std::domain_error {
    explicit SingularConjugator(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// An evaluation point where a defining denominator vanishes.
/// Callers are expected to resample rather than treat this as a hard error.
struct DegeneratePoint : std::runtime_error {
    explicit DegeneratePoint(const std::string& what) : std::runtime_error(what) {}
};

/// The retry budget for rejection sampling or resampling ran out.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adjinv
