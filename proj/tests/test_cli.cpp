#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qfaulhaber/faulhaber.hpp"
#include "qfaulhaber/json_io.hpp"

using namespace qfaulhaber;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const std::string& binary() {
    static const std::string bin = [] {
        const char* env = std::getenv("QFAULHABER_BIN");
        REQUIRE_MESSAGE(env != nullptr, "QFAULHABER_BIN must point at the CLI binary");
        return std::string(env);
    }();
    return bin;
}

RunResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(TESTS_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("psum") {
    RunResult r = run("psum --m 3 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    RunResult json_run = run("psum --m 1 --n 2 --format json");
    CHECK(json_run.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["terms"] == nlohmann::json::parse(R"([[0,"1"],[2,"1"],[4,"1"]])"));
    CHECK(poly_from_json(j) == power_sum(1, 2));

    CHECK(run("psum --m 5 --n 2 --format csv").out ==
          "m,n,polynomial\n5,2,q^6 + 4*q^5 + 7*q^4 + 9*q^3 + 7*q^2 + 4*q + 1\n");
}

TEST_CASE("json output round-trips through the parser") {
    for (auto [m, n] : {std::pair{3, 4}, {5, 3}, {7, 2}}) {
        RunResult r = run("psum --m " + std::to_string(m) + " --n " + std::to_string(n) +
                          " --format json");
        REQUIRE(r.exit_code == 0);
        CHECK(poly_from_json(nlohmann::json::parse(r.out)) == power_sum(m, n));
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("psum --m 0 --n 1").exit_code == 2);
    CHECK(run("psum --n 1").exit_code == 2);
    CHECK(run("psum --m 3 --n 1 --format yaml").exit_code == 2);
    CHECK(run("verify bogus").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("lgv --m 2 --k 3").exit_code == 2);
    CHECK(run("").exit_code == 2);
}

TEST_CASE("help exits with 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("psum --help").exit_code == 0);
}

TEST_CASE("faulhaber table output") {
    RunResult text = run("faulhaber --m-max 1");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "P[0,0] = 1\nP[1,0] = 1\nP[1,1] = 0\n");

    RunResult csv = run("faulhaber --m-max 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(count_lines_containing(csv.out, ",") == 11);  // header + 10 cells
    CHECK(csv.out.find("3,1,2*q + 2\n") != std::string::npos);

    RunResult latex = run("faulhaber --m-max 3 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out == golden("faulhaber_m3.tex"));
}

TEST_CASE("verify suites") {
    RunResult eq2 = run("verify eq2 --m-max 2 --n-max 3");
    CHECK(eq2.exit_code == 0);
    CHECK(count_lines_containing(eq2.out, "[pass] eq2") == 9);
    CHECK(eq2.out.find("overall: PASS") != std::string::npos);

    RunResult table1 = run("verify table1");
    CHECK(table1.exit_code == 0);

    RunResult json_report = run("verify inverse --dim-max 3 --format json");
    CHECK(json_report.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_report.out);
    CHECK(j["overall"] == true);
    CHECK(j["cases"].size() == 3);
}

TEST_CASE("salie fits") {
    RunResult one = run("salie --m 1");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "g[1,1] = 1\n");

    RunResult three = run("salie --m 3");
    CHECK(three.exit_code == 0);
    CHECK(count_lines_containing(three.out, "2*q - q^(1/2) + 2") == 2);
    CHECK(three.out.find("(negative coefficients present)") != std::string::npos);
    CHECK(three.out.find("g[3,3] = 1") != std::string::npos);

    RunResult latex = run("salie --m 3 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out == golden("salie_m3.tex"));

    CHECK(run("salie --m 3 --degree-bound 1").exit_code == 1);
}

TEST_CASE("lgv direct access") {
    RunResult r = run("lgv --m 3 --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("determinant = 2*q + 2") != std::string::npos);
    CHECK(r.out.find("match: yes") != std::string::npos);

    CHECK(run("lgv --m 8 --k 3 --budget 10").exit_code == 1);

    RunResult odd = run("lgv --m 4 --k 2 --parity odd --format json");
    CHECK(odd.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(odd.out);
    CHECK(j["match"] == true);
}

TEST_CASE("report command") {
    RunResult r = run("report --m-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("log-concavity") != std::string::npos);
    CHECK(r.out.find("g[1,3]: has negative coefficients") != std::string::npos);
}

TEST_CASE("output redirection") {
    const std::string path = "cli_test_out.tmp";
    RunResult r = run("psum --m 3 --n 1 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "1\n");
    std::remove(path.c_str());
}
