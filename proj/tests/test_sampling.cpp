#include <catch2/catch_amalgamated.hpp>

#include "adjinv/sampling.hpp"

using namespace adjinv;

TEST_CASE("below stays inside the bound and rejects bias") {
    TrialRng rng(1, 2);
    for (int k = 0; k < 2000; ++k) {
        std::uint64_t v = rng.below(7);
        CHECK(v < 7);
    }
    CHECK(TrialRng(0, 0).below(1) == 0);
}

TEST_CASE("sampled integers and rationals respect the bound") {
    TrialRng rng(3, 4);
    for (int k = 0; k < 500; ++k) {
        long long i = sample_int(rng, 10);
        CHECK(i >= -10);
        CHECK(i <= 10);
        Rational q = sample_rational(rng, 10);
        CHECK(q.numerator() >= -10);
        CHECK(q.numerator() <= 10);
        CHECK(q.denominator() >= 1);
        // normalization can only shrink the denominator
        CHECK(q.denominator() <= 10);
        Rational nz = sample_nonzero_rational(rng, 10);
        CHECK_FALSE(nz.is_zero());
    }
}

TEST_CASE("streams are reproducible per (seed, trial) and differ across trials") {
    TrialRng a(17, 5), b(17, 5), c(17, 6), d(18, 5);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int k = 0; k < 16; ++k) {
        va.push_back(a.next());
        vb.push_back(b.next());
        vc.push_back(c.next());
        vd.push_back(d.next());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
}

TEST_CASE("subgroup samples have the advertised shape") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(7, t);
        const int n = 4;

        Matrix<Rational> h = sample_group_element(rng, n, 10, Subgroup::H);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    CHECK(h(i, j).is_zero());
                else
                    CHECK_FALSE(h(i, i).is_zero());

        Matrix<Rational> u = sample_group_element(rng, n, 10, Subgroup::U);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) CHECK(u(i, j) == Rational(i == j ? 1 : 0));

        Matrix<Rational> b = sample_group_element(rng, n, 10, Subgroup::B);
        for (int i = 0; i < n; ++i) {
            CHECK_FALSE(b(i, i).is_zero());
            for (int j = 0; j < i; ++j) CHECK(b(i, j).is_zero());
        }

        Matrix<Rational> g = sample_group_element(rng, n, 10, Subgroup::GL);
        CHECK_FALSE(det(g).is_zero());
    }
}

TEST_CASE("borel factorization b = h u is consistent") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        TrialRng rng(11, t);
        BorelFactors f = sample_borel_factors(rng, 3, 10);
        CHECK(f.b == f.h * f.u);
        CHECK_FALSE(det(f.b).is_zero());
    }
}

TEST_CASE("the one-shot sample wrapper tags and reproduces") {
    GroupElement e1 = sample(Subgroup::B, 3, 42, 7, 10);
    GroupElement e2 = sample(Subgroup::B, 3, 42, 7, 10);
    CHECK(e1.subgroup == Subgroup::B);
    CHECK(e1.matrix == e2.matrix);
    GroupElement e3 = sample(Subgroup::B, 3, 42, 8, 10);
    CHECK(e1.matrix != e3.matrix);
    CHECK(to_string(Subgroup::H) == "H");
    CHECK(to_string(Subgroup::U) == "U");
    CHECK(to_string(Subgroup::B) == "B");
    CHECK(to_string(Subgroup::GL) == "GL");
}

TEST_CASE("conditional point sampling retries and gives up cleanly") {
    TrialRng rng(5, 0);
    Matrix<Rational> x =
        sample_point_where(rng, 2, 10, [](const Matrix<Rational>& m) { return !m(1, 0).is_zero(); });
    CHECK_FALSE(x(1, 0).is_zero());
    TrialRng rng2(5, 1);
    CHECK_THROWS_AS(
        sample_point_where(rng2, 2, 10, [](const Matrix<Rational>&) { return false; }),
        SamplingExhausted);
}
