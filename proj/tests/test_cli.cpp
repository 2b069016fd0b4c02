#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + ADJINV_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

using json = nlohmann::json;

}  // namespace

TEST_CASE("cli table output") {
    CliResult r = run_cli("table --n 2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "J:1,0 = x(2,1)\n"
          "J:2,0 = |x(1,1) x(1,2); x(2,1) x(2,2)|\n"
          "J:2,1 = |x(2,1) x(2,2); adj(2,1) adj(2,2)|\n");

    CliResult prime = run_cli("table --n 2 --suite prime");
    CHECK(prime.status == 0);
    CHECK(prime.out ==
          "J':1,0 = J:1,0\n"
          "J':2,0 = J:2,0\n"
          "J':2,1 = J:2,1\n");

    CliResult j = run_cli("table --n 3 --format json");
    CHECK(j.status == 0);
    json parsed = json::parse(j.out);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0][0]["id"] == "J:1,0");
    CHECK(parsed[2][2]["id"] == "J:3,2");
}

TEST_CASE("cli weights output") {
    CliResult r = run_cli("weights --n 2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "J:1,0 = a1*a2^-1\n"
          "J:2,0 = 1\n"
          "J:2,1 = a1*a2^-1\n");
    CliResult fin = run_cli("weights --n 2 --suite Yfinal --format json");
    CHECK(fin.status == 0);
    CHECK(json::parse(fin.out) == json::parse("[[[1,-1]],[[0,0],[0,0]]]"));
}

TEST_CASE("cli eval") {
    TempFile id3("cli_test_identity3.json",
                 "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]");
    CliResult r = run_cli("eval --n 3 --id J:1,0 --matrix " + id3.path);
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");

    TempFile x2("cli_test_x2.json", "[[\"1/2\",\"3\"],[\"-2/3\",\"5/4\"]]");
    CliResult y = run_cli("eval --n 2 --id Y:2,0 --matrix " + x2.path + " --format json");
    CHECK(y.status == 0);
    json parsed = json::parse(y.out);
    CHECK(parsed["id"] == "Y:2,0");
    CHECK(parsed["value"] == "3/2");  // det/tr = (21/8)/(7/4)

    // y:2 = J:2,1/J:1,0 divides by x21 = 0 at the identity
    TempFile id2("cli_test_identity2.json", "[[\"1\",\"0\"],[\"0\",\"1\"]]");
    CHECK(run_cli("eval --n 2 --id y:2 --matrix " + id2.path).status == 1);

    CHECK(run_cli("eval --n 2 --id J:9,0 --matrix " + x2.path).status == 2);
    CHECK(run_cli("eval --n 2 --id nonsense --matrix " + x2.path).status == 2);
    CHECK(run_cli("eval --n 2 --id J:1,0 --matrix cli_test_missing.json").status == 2);
    TempFile ragged("cli_test_ragged.json", "[[\"1\",\"2\"],[\"3\"]]");
    CHECK(run_cli("eval --n 2 --id J:1,0 --matrix " + ragged.path).status == 2);
    // dimension mismatch between --n and the file
    CHECK(run_cli("eval --n 3 --id J:1,0 --matrix " + x2.path).status == 2);
}

TEST_CASE("cli verify") {
    CliResult r = run_cli("verify --n 2 --suite u-invariance --trials 5 --seed 1");
    CHECK(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["check"] == "u-invariance");
    CHECK(parsed["n"] == 2);
    CHECK(parsed["trials"] == 5);
    CHECK(parsed["seed"] == 1);
    CHECK(parsed["passes"] == 5);
    CHECK(parsed["failures"].empty());

    CHECK(run_cli("verify --n 2 --suite n2-closed-forms --trials 5").status == 0);
    CHECK(run_cli("verify --n 3 --suite n2-closed-forms --trials 5").status == 2);
    CHECK(run_cli("verify --n 2 --suite no-such-suite").status == 2);
    CHECK(run_cli("verify --n 2").status == 2);  // --suite is required

    CliResult text = run_cli("verify --n 2 --suite adjugate --trials 4 --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("check: adjugate") == 0);
}

TEST_CASE("cli rank") {
    CliResult r = run_cli("rank --n 2 --suite J");
    CHECK(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["rank"] == 3);
    CHECK(parsed["expected"] == 3);
    CHECK(parsed["system"] == "J");
    CHECK(run_cli("rank --n 3 --suite B").status == 0);
    CHECK(run_cli("rank --n 1 --suite B").status == 2);
    CHECK(run_cli("rank --n 2 --suite Q").status == 2);
}

TEST_CASE("cli lattice") {
    CliResult r = run_cli("lattice --n 2");
    CHECK(r.status == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["stage"] == "Yfinal");
    CHECK(parsed["rank"] == 1);
    CHECK(parsed["system"] == json::parse("[\"y:1\",\"Y:2,0\",\"y:2\"]"));
    CHECK(parsed["basis"] == json::parse("[[0,1,0],[0,0,1]]"));
    CliResult text = run_cli("lattice --n 2 --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("kernel dimension: 2") != std::string::npos);
}

TEST_CASE("cli dimension cap and usage errors") {
    CHECK(run_cli("table --n 7").status == 2);
    CHECK(run_cli("table --n 7 --allow-large").status == 0);
    CHECK(run_cli("table --n 0").status == 2);
    CHECK(run_cli("table").status == 2);             // --n is required
    CHECK(run_cli("no-such-command --n 2").status == 2);
    CHECK(run_cli("table --n 2 --format yaml").status == 2);
    CHECK(run_cli("table --n 2 --suite nonsense").status == 2);
}

TEST_CASE("cli output is deterministic") {
    const std::string args = "verify --n 3 --suite semi-invariance --trials 3 --seed 9";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
}
