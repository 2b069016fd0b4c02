#include <catch2/catch_amalgamated.hpp>

#include "adjinv/verify.hpp"

using namespace adjinv;

namespace {

void expect_clean(const VerificationReport& rep, const std::string& name, int n,
                  std::uint64_t trials, std::uint64_t seed) {
    INFO("check " << name << " n=" << n);
    CHECK(rep.check_name == name);
    CHECK(rep.n == n);
    CHECK(rep.trials == trials);
    CHECK(rep.seed == seed);
    CHECK(rep.passes == trials);
    CHECK(rep.failures.empty());
    CHECK(rep.ok());
}

Matrix<Rational> frozen2() {
    Matrix<Rational> x(2, 2);
    x(0, 0) = Rational(1, 2);
    x(0, 1) = Rational(3);
    x(1, 0) = Rational(-2, 3);
    x(1, 1) = Rational(5, 4);
    return x;
}

}  // namespace

TEST_CASE("built-in checks pass on random data") {
    expect_clean(check_U_invariance(2, 20, 1), "u-invariance", 2, 20, 1);
    expect_clean(check_U_invariance(3, 12, 2), "u-invariance", 3, 12, 2);
    expect_clean(check_B_invariance(2, 12, 3), "b-invariance", 2, 12, 3);
    expect_clean(check_B_invariance(3, 10, 4), "b-invariance", 3, 10, 4);
    expect_clean(check_semi_invariance(3, 8, 5), "semi-invariance", 3, 8, 5);
    expect_clean(check_chain_identity(3, 10, 6), "chain-identity", 3, 10, 6);
    expect_clean(check_adjugate_contract(3, 12, 7), "adjugate", 3, 12, 7);
    expect_clean(check_adjugate_contract(1, 8, 7), "adjugate", 1, 8, 7);
    expect_clean(check_n2_closed_forms(20, 8), "n2-closed-forms", 2, 20, 8);
    expect_clean(check_homogeneity(3, 10, 9), "homogeneity", 3, 10, 9);
    CHECK_THROWS_AS(check_B_invariance(1, 5, 0), IndexOutOfRange);
}

TEST_CASE("system selectors") {
    CHECK(j_system(3).size() == 6);
    auto b3 = b_system(3);
    REQUIRE(b3.size() == 4);
    CHECK(b3[0] == id_Y(2, 0));
    CHECK(b3[1] == id_Y(3, 0));
    CHECK(b3[2] == id_Y(3, 1));
    CHECK(b3[3] == id_y(3));
    for (int n = 2; n <= 6; ++n) {
        CHECK(static_cast<int>(j_system(n).size()) == n * (n + 1) / 2);
        CHECK(static_cast<int>(b_system(n).size()) == n * (n - 1) / 2 + 1);
    }
}

TEST_CASE("jacobian matches hand-computed gradients at n = 2") {
    // at X = [1/2 3; -2/3 5/4]: det = 21/8, tr = 7/4
    const Matrix<Rational> x = frozen2();
    const std::vector<InvariantId> system = {id_J(1, 0), id_J(2, 0), id_J(2, 1), id_y(2),
                                             id_Y(2, 0)};
    Matrix<Rational> jac = jacobian(system, 2, x);
    REQUIRE(jac.rows() == 5);
    REQUIRE(jac.cols() == 4);
    // columns ordered x11, x12, x21, x22
    const Rational expected[5][4] = {
        {Rational(0), Rational(0), Rational(1), Rational(0)},           // x21
        {Rational(5, 4), Rational(2, 3), Rational(-3), Rational(1, 2)}, // det
        {Rational(-2, 3), Rational(0), Rational(7, 4), Rational(-2, 3)},// x21 tr
        {Rational(1), Rational(0), Rational(0), Rational(1)},           // tr
        {Rational(-1, 7), Rational(8, 21), Rational(-12, 7), Rational(-4, 7)},  // det/tr
    };
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 4; ++c) {
            INFO("row " << r << " col " << c);
            CHECK(jac(r, c) == expected[r][c]);
        }
}

TEST_CASE("jacobian of the corner entry is an indicator row") {
    TrialRng rng(31, 0);
    Matrix<Rational> x = sample_matrix(rng, 3, 10);
    Matrix<Rational> jac = jacobian({id_J(1, 0)}, 3, x);  // J_{1,0} = x_{3,1}
    REQUIRE(jac.rows() == 1);
    for (int c = 0; c < 9; ++c) CHECK(jac(0, c) == Rational(c == 6 ? 1 : 0));
}

TEST_CASE("independence ranks are full for both systems") {
    for (int n = 2; n <= 4; ++n) {
        RankCertificate jc = independence_rank(j_system(n), n, 0);
        CHECK(jc.rank == n * (n + 1) / 2);
        CHECK(jc.point.rows() == n);
        CHECK(jc.attempts >= 1);
        RankCertificate bc = independence_rank(b_system(n), n, 0);
        CHECK(bc.rank == n * (n - 1) / 2 + 1);
        // the certifying point really exhibits the rank
        CHECK(rank(jacobian(b_system(n), n, bc.point)) == bc.rank);
    }
}

TEST_CASE("rank is monotone under taking subsystems") {
    RankCertificate part = independence_rank({id_J(1, 0), id_J(2, 0)}, 2, 1);
    RankCertificate full = independence_rank(j_system(2), 2, 1);
    CHECK(part.rank == 2);
    CHECK(full.rank == 3);
    CHECK(part.rank <= full.rank);
}
