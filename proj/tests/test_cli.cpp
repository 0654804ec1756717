// End-to-end tests of the command-line tool: spawn the real binary, parse
// its JSON/CSV output, check exit codes. The binary path is injected by the
// build as COORBITAL_CLI_PATH.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#ifndef COORBITAL_CLI_PATH
#error "COORBITAL_CLI_PATH must point at the coorbital binary"
#endif

namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(COORBITAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse_json(const RunResult& r) {
    return nlohmann::json::parse(r.output);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("solve: equal masses") {
    const auto r = run_cli("solve --mu 1,1,1,1");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    REQUIRE(j["root_count"] == 3);
    CHECK(std::fabs(j["roots"][0].get<double>() - kPi / 3) < 1e-10);
    CHECK(std::fabs(j["roots"][1].get<double>() - kPi / 2) < 1e-10);
    CHECK(std::fabs(j["roots"][2].get<double>() - 2 * kPi / 3) < 1e-10);
    REQUIRE(j["class_count"] == 2);
    CHECK(j["classes"][0]["kind"] == "kite");
    CHECK(j["classes"][1]["kind"] == "square");
    CHECK(j["tangency"] == false);
    CHECK(j["params"]["a2"] == 1.0);
}

TEST_CASE("solve: ratios form and --check") {
    const auto r = run_cli("solve --ratios 2,3 --check");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(j["root_count"] == 1);
    CHECK(j["check"]["match"] == true);
}

TEST_CASE("solve: unequal opposite masses are rejected") {
    const auto r = run_cli("solve --mu 1,2,1,3");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("--mu") != std::string::npos);
    CHECK(r.output.find("mu2") != std::string::npos);
}

TEST_CASE("solve: requires exactly one parameter form") {
    CHECK(run_cli("solve").exit_code == 1);
    CHECK(run_cli("solve --mu 1,1,1,1 --ratios 1,1").exit_code == 1);
    CHECK(run_cli("solve --mu 1,-1,1,-1").exit_code == 1);
    CHECK(run_cli("solve --ratios 0,1").exit_code == 1);
}

TEST_CASE("json output round-trips") {
    const auto r = run_cli("solve --mu 1,0.8,1.1,0.8");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    const std::string dumped = j.dump(2);
    const auto reparsed = nlohmann::json::parse(dumped);
    CHECK(reparsed == j);
    CHECK(reparsed.dump(2) == dumped);
}

TEST_CASE("--degrees converts json angles only") {
    const auto r = run_cli("--degrees solve --mu 1,1,1,1");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(std::fabs(j["roots"][0].get<double>() - 60.0) < 1e-8);
    CHECK(std::fabs(j["roots"][1].get<double>() - 90.0) < 1e-8);
    CHECK(std::fabs(j["classes"][0]["theta1"].get<double>() - 60.0) < 1e-8);

    const auto e = run_cli("--degrees eval-f --x 90");
    const auto je = parse_json(e);
    CHECK(std::fabs(je["x"].get<double>() - 90.0) < 1e-12);
    // Function values are not angles and stay unconverted.
    CHECK(std::fabs(je["f"].get<double>() - 0.6464466094067262) < 1e-12);
}

TEST_CASE("count") {
    const auto r = run_cli("count --ratios 1.5,0.5");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(j["root_count"] == 3);
    CHECK(j["class_count"] == 3);
}

TEST_CASE("masses: square geometry") {
    const auto r = run_cli(
        "masses --theta 1.5707963267948966,1.5707963267948966,"
        "1.5707963267948966,1.5707963267948966");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(j["dimension"] == 2);
    CHECK(j["positive_feasible"] == true);
    // Bad geometry: gaps not summing to 2*pi.
    CHECK(run_cli("masses --theta 1,1,1,1").exit_code == 1);
}

TEST_CASE("audit subcommand") {
    const auto r1 = run_cli("audit --theorem 1 --grid 100");
    REQUIRE(r1.exit_code == 0);
    const auto j1 = parse_json(r1);
    CHECK(j1["counterexample_found"] == false);
    CHECK(j1["min_feasible_residual"].get<double>() > 1e-4);

    const auto r2 = run_cli("audit --theorem 2 --grid 100");
    REQUIRE(r2.exit_code == 0);
    const auto j2 = parse_json(r2);
    CHECK(j2["passed"] == true);

    CHECK(run_cli("audit --theorem 3").exit_code == 1);
    CHECK(run_cli("audit --theorem 1 --grid 10").exit_code == 1);
}

TEST_CASE("verify subcommand") {
    const auto r = run_cli(
        "verify --theta 1.0471975511965976,2.0943951023931953,"
        "2.0943951023931953,1.0471975511965976 --mu 1,1,1,1 "
        "--eps 1e-3,1e-4,1e-5");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(std::fabs(j["slope"].get<double>() - 1.0) < 0.2);
    REQUIRE(j["points"].size() == 3);
    CHECK(j["points"][0]["lambda_fit"].get<double>() < 0.0);
    // Increasing eps list is invalid.
    CHECK(run_cli("verify --theta 1.5707963267948966,1.5707963267948966,"
                  "1.5707963267948966,1.5707963267948966 --mu 1,1,1,1 "
                  "--eps 1e-5,1e-4,1e-3")
              .exit_code == 1);
}

TEST_CASE("sweep: bifurcation slice with csv") {
    const auto r = run_cli(
        "sweep --a-min 0.60 --a-max 0.61 --steps 2 --out cli_sweep_test.csv");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["regime"] == "square_only");
    CHECK(j["rows"][1]["regime"] == "square_and_kite");

    const auto lines = read_lines("cli_sweep_test.csv");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "a,regime,kite_theta1");
    CHECK(lines[1] == "0.6,square_only,");
    CHECK(lines[2].rfind("0.61,square_and_kite,1.50", 0) == 0);
    std::remove("cli_sweep_test.csv");
}

TEST_CASE("sweep: parameter grid with csv") {
    const auto r = run_cli(
        "sweep --a2-min 0.5 --a2-max 1.5 --a2-steps 3 "
        "--a3-min 0.5 --a3-max 1.5 --a3-steps 3 --out cli_grid_test.csv");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    REQUIRE(j["rows"].size() == 9);
    for (const auto& row : j["rows"]) {
        const int n = row["root_count"].get<int>();
        CHECK(n >= 1);
        CHECK(n <= 3);
        CHECK(row["roots"].size() == static_cast<size_t>(n));
    }

    const auto lines = read_lines("cli_grid_test.csv");
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "a2,a3,root_count,class_count,root1,root2,root3");
    // Every data row has exactly 6 commas.
    for (size_t i = 1; i < lines.size(); ++i) {
        int commas = 0;
        for (char c : lines[i]) commas += c == ',';
        CHECK(commas == 6);
    }
    std::remove("cli_grid_test.csv");
}

TEST_CASE("sweep: missing range flags") {
    CHECK(run_cli("sweep --a-min 0.5 --a-max 1.0").exit_code == 1);
    CHECK(run_cli("sweep --a-min 1.0 --a-max 0.5 --steps 3").exit_code == 1);
}

TEST_CASE("eval-f at pi") {
    const auto r = run_cli("eval-f --x 3.14159265358979323846");
    REQUIRE(r.exit_code == 0);
    const auto j = parse_json(r);
    CHECK(std::fabs(j["f"].get<double>()) < 1e-14);
    CHECK(std::fabs(j["f1"].get<double>() + 0.875) < 1e-13);
    CHECK(run_cli("eval-f --x 0").exit_code == 1);
    CHECK(run_cli("eval-f --x 7").exit_code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("solve --mu notanumber").exit_code == 1);
    // Ratios far past the invertible range of the kite map: convergence
    // failure is reported as exit 2.
    CHECK(run_cli("sweep --a-min 1e12 --a-max 2e12 --steps 2").exit_code == 2);
}
