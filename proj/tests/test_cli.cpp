#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string command = std::string(LPCOUNT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 512> buffer{};
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        result.output += buffer.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data(const std::string& file) {
    return std::string(LPCOUNT_DATA_DIR) + "/" + file;
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = "/tmp/lpcount_test_" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("check: Delzant input exits 0 with verdicts") {
    RunResult r = run_cli("check " + data("delta4.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("integral: true") != std::string::npos);
    CHECK(r.output.find("simple: true") != std::string::npos);
    CHECK(r.output.find("delzant: true") != std::string::npos);
}

TEST_CASE("check: non-simple input exits 3") {
    const std::string pyramid = write_temp("pyramid.json", R"({
        "dimension": 3,
        "normals": [[0, 0, -1], [1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]],
        "offsets": [0, 1, 1, 1, 1]
    })");
    RunResult r = run_cli("check " + pyramid);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("simple: false") != std::string::npos);
}

TEST_CASE("check: malformed file exits 2, unbounded exits 4") {
    const std::string bad = write_temp("bad.json", "{ not json");
    CHECK(run_cli("check " + bad).exit_code == 2);
    CHECK(run_cli("check /nonexistent/file.json").exit_code == 2);
    const std::string strip = write_temp("strip.json", R"({
        "dimension": 2,
        "normals": [[1, 0], [-1, 0]],
        "offsets": [1, 1]
    })");
    CHECK(run_cli("check " + strip).exit_code == 4);
}

TEST_CASE("check: non-integral input is not Delzant") {
    const std::string half = write_temp("half.json", R"({
        "dimension": 2,
        "normals": [[-1, 0], [0, -1], [1, 0], [0, 1]],
        "offsets": ["1/2", 0, "1/2", 1]
    })");
    RunResult r = run_cli("check " + half);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("integral: false") != std::string::npos);
    CHECK(r.output.find("simple: true") != std::string::npos);
    CHECK(r.output.find("delzant: false") != std::string::npos);
}

TEST_CASE("polynomials: worked examples render canonically") {
    RunResult tri = run_cli("polynomials " + data("delta2.json"));
    CHECK(tri.exit_code == 0);
    CHECK(tri.output.find("boundary: 3*k") != std::string::npos);

    RunResult tetra = run_cli("polynomials " + data("delta3.json"));
    CHECK(tetra.output.find("boundary: 2*k^2 + 2") != std::string::npos);

    RunResult quintic = run_cli("polynomials " + data("delta4.json"));
    CHECK(quintic.output.find("boundary: 5/6*k^3 + 25/6*k") != std::string::npos);
}

TEST_CASE("polynomials: structured output carries exact coefficients") {
    RunResult r = run_cli("polynomials " + data("delta3.json") + " --format structured");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["polynomials"]["boundary"]["coefficients"] ==
          nlohmann::json::array({"2", "0", "2"}));
    CHECK(doc["polynomials"]["ehrhart"]["coefficients"] ==
          nlohmann::json::array({"1", "11/6", "1", "1/6"}));
}

TEST_CASE("count: worked example counts and weights") {
    RunResult r = run_cli("count " + data("delta3.json") + " --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("boundary: 10") != std::string::npos);

    RunResult dilated = run_cli("count " + data("delta2.json") + " --k 4");
    CHECK(dilated.output.find("boundary: 12") != std::string::npos);

    RunResult weights =
        run_cli("count " + data("delta4.json") + " --k 1 --weights --boundary-only");
    CHECK(weights.exit_code == 0);
    CHECK(weights.output.find("boundary: 5") != std::string::npos);
    CHECK(weights.output.find("0 0 0 0") != std::string::npos);
    CHECK(weights.output.find("1 0 0 0") != std::string::npos);

    // --boundary-only without --weights is a usage error.
    CHECK(run_cli("count " + data("delta2.json") + " --k 1 --boundary-only").exit_code == 2);
}

TEST_CASE("check and count: structured output") {
    RunResult c = run_cli("check " + data("trapezoid.json") + " --format structured");
    CHECK(c.exit_code == 0);
    auto cdoc = nlohmann::json::parse(c.output);
    CHECK(cdoc["delzant"] == true);
    CHECK(cdoc["vertices"] == 4);

    RunResult r =
        run_cli("count " + data("unit_square.json") + " --k 3 --weights --format structured");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["total"] == 16);
    CHECK(doc["boundary"] == 12);
    CHECK(doc["interior"] == 4);
    CHECK(doc["weights_boundary_only"] == false);
    CHECK(doc["weights"].size() == 16);

    // A non-Delzant file is refused by count.
    const std::string wide = write_temp("wide.json", R"({
        "dimension": 2,
        "normals": [[0, -1], [1, 1], [-1, 1]],
        "offsets": [0, 2, 0]
    })");
    CHECK(run_cli("count " + wide + " --k 1").exit_code == 3);
}

TEST_CASE("count: guard exceeded exits 2 with a message") {
    RunResult r = run_cli("count " + data("unit_cube.json") + " --k 200000000");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("guard") != std::string::npos);
}

TEST_CASE("verify: bundled shapes pass and reports are byte-identical") {
    RunResult a = run_cli("verify " + data("delta4.json") + " --kmax 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("result: pass") != std::string::npos);
    RunResult b = run_cli("verify " + data("delta4.json") + " --kmax 3");
    CHECK(a.output == b.output);

    RunResult cube = run_cli("verify " + data("unit_cube.json") + " --kmax 5");
    CHECK(cube.exit_code == 0);
    CHECK(cube.output.find("boundary: 6*k^2 + 2") != std::string::npos);
}

TEST_CASE("verify: non-integral input exits 3") {
    const std::string corrupted = write_temp("corrupted.json", R"({
        "dimension": 2,
        "normals": [[-1, 0], [0, -1], [1, 1]],
        "offsets": [0, 0, "1/2"]
    })");
    CHECK(run_cli("verify " + corrupted).exit_code == 3);
}

TEST_CASE("verify: structured report is valid JSON") {
    RunResult r = run_cli("verify " + data("delta2.json") + " --kmax 2 --format structured");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["oracle"].size() == 2);
    CHECK(doc["polynomials"]["boundary"]["text"] == "3*k");
}

TEST_CASE("non-primitive normals rescale with a warning on stderr") {
    const std::string scaled = write_temp("scaled.json", R"({
        "dimension": 2,
        "normals": [[-2, 0], [0, -1], [3, 3]],
        "offsets": [0, 0, 3]
    })");
    RunResult r = run_cli("check " + scaled);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning") != std::string::npos);
    CHECK(r.output.find("delzant: true") != std::string::npos);
}
