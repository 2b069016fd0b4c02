#pragma once

#include <cstdint>
#include <string>

#include "adjinv/errors.hpp"
#include "adjinv/matrix.hpp"

namespace adjinv {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// splitmix64 stream keyed by (seed, trial). Portable and stable across
/// platforms, unlike the distributions in <random>, so reported witnesses
/// can be replayed anywhere.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(mix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^
                       (trial + 0xD1B54A32D192ED03ull))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw IndexOutOfRange("TrialRng::below(0)");
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

inline constexpr int kValueRetries = 64;
inline constexpr int kPointRetries = 16;

/// Uniform integer in [-bound, bound].
inline long long sample_int(TrialRng& rng, long long bound) {
    if (bound < 1) throw IndexOutOfRange("sample_int: bound must be >= 1");
    return static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * bound + 1))) - bound;
}

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
inline Rational sample_rational(TrialRng& rng, long long bound) {
    long long num = sample_int(rng, bound);
    long long den = static_cast<long long>(rng.below(static_cast<std::uint64_t>(bound))) + 1;
    return Rational(num, den);
}

inline Rational sample_nonzero_rational(TrialRng& rng, long long bound) {
    for (int k = 0; k < kValueRetries; ++k) {
        Rational r = sample_rational(rng, bound);
        if (!r.is_zero()) return r;
    }
    throw SamplingExhausted("sample_nonzero_rational: retries exhausted");
}

inline Matrix<Rational> sample_matrix(TrialRng& rng, int n, long long bound) {
    Matrix<Rational> m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = sample_rational(rng, bound);
    return m;
}

/// H = invertible diagonal torus, U = upper unitriangular, B = invertible
/// upper triangular (Borel), GL = all invertible matrices.
enum class Subgroup { H, U, B, GL };

inline std::string to_string(Subgroup s) {
    switch (s) {
        case Subgroup::H: return "H";
        case Subgroup::U: return "U";
        case Subgroup::B: return "B";
        case Subgroup::GL: return "GL";
    }
    return "?";
}

struct GroupElement {
    Subgroup subgroup;
    Matrix<Rational> matrix;
};

inline Matrix<Rational> sample_group_element(TrialRng& rng, int n, long long bound, Subgroup sub) {
    if (sub == Subgroup::GL) {
        for (int k = 0; k < kPointRetries; ++k) {
            Matrix<Rational> g = sample_matrix(rng, n, bound);
            if (!det(g).is_zero()) return g;
        }
        throw SamplingExhausted("sample_group_element: singular resamples exhausted");
    }
    Matrix<Rational> g = Matrix<Rational>::identity(n);
    if (sub == Subgroup::H || sub == Subgroup::B)
        for (int k = 0; k < n; ++k) g(k, k) = sample_nonzero_rational(rng, bound);
    if (sub == Subgroup::U || sub == Subgroup::B)
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) g(r, c) = sample_rational(rng, bound);
    return g;
}

/// Subgroup element from the deterministic (seed, trial_index) stream.
inline GroupElement sample(Subgroup sub, int n, std::uint64_t seed, std::uint64_t trial_index,
                           long long bound) {
    TrialRng rng(seed, trial_index);
    return GroupElement{sub, sample_group_element(rng, n, bound, sub)};
}

/// Borel element together with its torus/unipotent factors, b = h * u.
struct BorelFactors {
    Matrix<Rational> h, u, b;
};

inline BorelFactors sample_borel_factors(TrialRng& rng, int n, long long bound) {
    BorelFactors f{sample_group_element(rng, n, bound, Subgroup::H),
                   sample_group_element(rng, n, bound, Subgroup::U),
                   Matrix<Rational>(n, n)};
    f.b = f.h * f.u;
    return f;
}

/// Point where every chain division is defined, i.e. the full final-stage
/// table evaluates. Resamples on degeneracy.
template <class F>
Matrix<Rational> sample_point_where(TrialRng& rng, int n, long long bound, F&& usable) {
    for (int k = 0; k < kPointRetries; ++k) {
        Matrix<Rational> x = sample_matrix(rng, n, bound);
        if (usable(x)) return x;
    }
    throw SamplingExhausted("sample_point_where: degenerate resamples exhausted");
}

}  // namespace adjinv
