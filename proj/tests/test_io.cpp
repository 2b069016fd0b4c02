#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "adjinv/io.hpp"

using namespace adjinv;

namespace {

Matrix<Rational> frozen3() {
    Matrix<Rational> x(3, 3);
    x(0, 0) = Rational(1, 2);
    x(0, 1) = Rational(-1, 3);
    x(0, 2) = Rational(2);
    x(1, 0) = Rational(3);
    x(1, 1) = Rational(1, 5);
    x(1, 2) = Rational(-1);
    x(2, 0) = Rational(-2);
    x(2, 1) = Rational(1);
    x(2, 2) = Rational(4, 3);
    return x;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix json round-trip") {
    Matrix<Rational> x = frozen3();
    json j = matrix_to_json(x);
    CHECK(j[0][1] == "-1/3");
    CHECK(j[1][0] == "3");
    CHECK(matrix_from_json(j) == x);
}

TEST_CASE("matrix json tolerates typeset minus signs") {
    json j = json::parse("[[\"1/2\", \"0\"], [\"3\", \"−1/5\"]]");
    Matrix<Rational> m = matrix_from_json(j);
    CHECK(m(1, 1) == Rational(-1, 5));
}

TEST_CASE("malformed matrix json is rejected") {
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"a\":1}")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1\",\"2\"],[\"3\"]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3,4]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1.5\"]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1/0\"]]")), std::invalid_argument);
}

TEST_CASE("matrix files") {
    TempFile good("io_test_matrix.json", "[[\"1/2\", \"-1/3\"], [\"3\", \"1/5\"]]");
    Matrix<Rational> m = read_matrix_file(good.path);
    CHECK(m(0, 0) == Rational(1, 2));
    CHECK(m(1, 1) == Rational(1, 5));
    CHECK_THROWS_AS(read_matrix_file("io_test_no_such_file.json"), std::invalid_argument);
    TempFile bad("io_test_bad.json", "not json at all");
    CHECK_THROWS_AS(read_matrix_file(bad.path), std::invalid_argument);
}

TEST_CASE("report json round-trip keeps every field") {
    VerificationReport rep;
    rep.check_name = "semi-invariance";
    rep.n = 3;
    rep.trials = 7;
    rep.seed = 42;
    rep.passes = 6;
    FailureRecord f;
    f.trial = 4;
    f.witnesses = {{"h", Matrix<Rational>::identity(3)}, {"x", frozen3()}};
    f.notes = {{"id", "J:2,1"}, {"weight", "(1, 0, -1)"}};
    f.lhs = "-56/15";
    f.rhs = "56/15";
    rep.failures.push_back(f);

    json j = report_to_json(rep);
    CHECK(j.dump().rfind("{\"check\":", 0) == 0);  // stable key order
    CHECK(j["failures"][0]["witnesses"]["id"] == "J:2,1");

    VerificationReport back = report_from_json(j);
    CHECK(back.check_name == rep.check_name);
    CHECK(back.n == rep.n);
    CHECK(back.trials == rep.trials);
    CHECK(back.seed == rep.seed);
    CHECK(back.passes == rep.passes);
    REQUIRE(back.failures.size() == 1);
    CHECK(back.failures[0].trial == 4);
    CHECK(back.failures[0].witnesses == f.witnesses);
    CHECK(back.failures[0].notes == f.notes);
    CHECK(back.failures[0].lhs == f.lhs);
    CHECK(back.failures[0].rhs == f.rhs);
    CHECK_FALSE(back.ok());

    std::string text = report_to_text(rep);
    CHECK(text.find("check: semi-invariance") != std::string::npos);
    CHECK(text.find("trial 4: lhs = -56/15, rhs = 56/15") != std::string::npos);
}

TEST_CASE("definitions render like the worked tables") {
    CHECK(render_minor(minor_spec(3, 1, 0)) == "x(3,1)");
    CHECK(render_minor(minor_spec(3, 2, 1)) == "|x(3,1) x(3,2); adj(3,1) adj(3,2)|");
    CHECK(render_definition(3, id_J(3, 2)) ==
          "|x(3,1) x(3,2) x(3,3); adj(2,1) adj(2,2) adj(2,3); adj(3,1) adj(3,2) adj(3,3)|");
    CHECK(render_definition(3, id_Jp(3, 1)) == "J:3,1/J:2,1");
    CHECK(render_definition(3, id_Jp(2, 0)) == "J:2,0");
    CHECK(render_definition(3, id_y(1)) == "J':1,0");
    CHECK(render_definition(3, id_y(2)) == "J':2,1/J':1,0");
    CHECK(render_definition(3, id_Jpp(2, 0)) == "J':2,0/y:1");
    CHECK(render_definition(3, id_Jpp(3, 0)) == "J':3,0/J':2,0");
    CHECK(render_definition(3, id_Jpp(3, 1)) == "J':3,1");
    CHECK(render_definition(3, id_Y(3, 1)) == "J'':3,1*y:2/y:3");
}

TEST_CASE("table text for n = 2") {
    CHECK(render_table_text(2, Stage::J) ==
          "J:1,0 = x(2,1)\n"
          "J:2,0 = |x(1,1) x(1,2); x(2,1) x(2,2)|\n"
          "J:2,1 = |x(2,1) x(2,2); adj(2,1) adj(2,2)|\n");
    CHECK(render_table_text(2, Stage::Final) ==
          "y:1 = J':1,0\n"
          "Y:2,0 = J'':2,0*y:1/y:2\n"
          "y:2 = J':2,1/J':1,0\n");
}

TEST_CASE("table and weight json mirror the triangular layout") {
    json t = table_to_json(2, Stage::J);
    REQUIRE(t.size() == 2);
    CHECK(t[0][0]["id"] == "J:1,0");
    CHECK(t[0][0]["definition"] == "x(2,1)");
    CHECK(t[1][1]["id"] == "J:2,1");

    json w = weights_to_json(2, Stage::J);
    CHECK(w == json::parse("[[[1,-1]],[[0,0],[1,-1]]]"));
    CHECK(render_weights_text(2, Stage::J) ==
          "J:1,0 = a1*a2^-1\n"
          "J:2,0 = 1\n"
          "J:2,1 = a1*a2^-1\n");

    CHECK(intmat_to_json({{Int(1), Int(-2)}, {Int(3), Int(0)}}) == json::parse("[[1,-2],[3,0]]"));
}
