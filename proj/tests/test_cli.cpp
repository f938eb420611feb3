#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Drives the installed binary end to end: output formats, determinism,
// round-trips, and exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(RISKODDS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("engagement rational output lists the six-sided odds") {
    auto r = run_cli("engagement -m 3 -n 2 -a 6 -d 6 -k 2 --format rational");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "l=2 2890/7776\nl=1 2611/7776\nl=0 2275/7776\n");
}

TEST_CASE("engagement oracle verification exits cleanly") {
    auto r = run_cli("engagement -m 2 -n 2 -a 6 -d 10 -k 2 --verify");
    CHECK(r.exit_code == 0);
    auto trivial = run_cli("engagement -m 1 -n 1 -a 1 -d 1 -k 1");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output.find("defender loses 0: 1.0000") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run_cli("engagement -m 3 -n 3 -a 6 -d 6 -k 3").exit_code == 2);
    CHECK(run_cli("threshold -D 5 -t 0 --mode ac").exit_code == 2);
    CHECK(run_cli("threshold -D 5 -t 50 --mode nonsense").exit_code == 2);
    CHECK(run_cli("battle -A 1 -D 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("threshold -D 5 -t 50 --format rational").exit_code == 2);
    // Rational battle output beyond the exact-state limit is an error.
    CHECK(run_cli("battle -A 100 -D 90 --format rational").exit_code == 2);
}

TEST_CASE("battle json output round-trips bit-exactly") {
    auto r = run_cli("battle -A 10 -D 9 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["inputs"]["att_virtual"] == 7);
    CHECK(parsed["inputs"]["def_virtual"] == 8);
    double strict = parsed["vc_strict"].get<double>();
    CHECK(strict == doctest::Approx(0.51356).epsilon(1e-4));
    // Serializing the parsed document again must reproduce the bytes.
    auto again = nlohmann::json::parse(parsed.dump(2));
    CHECK(again["vc_strict"].get<double>() == strict);
    CHECK(parsed.dump(2) == again.dump(2));
    CHECK(parsed["vc_lower_bound"].get<double>() <= strict + 1e-12);
    CHECK(strict <= parsed["vc_upper_bound"].get<double>() + 1e-12);
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const char* args : {"battle -A 12 -D 7 --format json",
                             "table vcac --format csv",
                             "dist -M 4 --format csv"}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("exact battle output matches the single-engagement reduction") {
    auto r = run_cli("battle -A 2 -D 1 --format rational");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ac_exact 5/12") != std::string::npos);
}

TEST_CASE("threshold reproduces reference cells") {
    auto r = run_cli("threshold -D 6 -t 50 --mode ac --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("6,50,ac,7") != std::string::npos);
    CHECK(run_cli("threshold -D 2 -t 20 --mode ac --format csv").output.find("2,20,ac,3") !=
          std::string::npos);
    CHECK(run_cli("threshold -D 15 -t 80 --mode vc --format csv").output.find("15,80,vc,20") !=
          std::string::npos);
}

TEST_CASE("dist emits normalized csv columns") {
    auto r = run_cli("dist -M 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("M,j,probability,tail\n", 0) == 0);
    // Column sums per M.
    double sums[4] = {0, 0, 0, 0};
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        int m, j;
        double prob, tail;
        REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &m, &j, &prob, &tail) == 4);
        sums[m] += prob;
    }
    for (int m = 1; m <= 3; ++m) CHECK(sums[m] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(run_cli("dist -M 0").exit_code == 2);
}

TEST_CASE("dist first column equals the engagement odds") {
    auto r = run_cli("dist -M 1 --format rational");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("M=1 j=0 2275/7776") != std::string::npos);
    CHECK(r.output.find("M=1 j=1 2611/7776") != std::string::npos);
    CHECK(r.output.find("M=1 j=2 1445/3888") != std::string::npos);
}

TEST_CASE("table diff reports mismatches without failing") {
    auto r = run_cli("table vcac --diff --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("diff total:") != std::string::npos);
}

TEST_CASE("threshold table cells grow along rows and columns") {
    auto r = run_cli("table vcac --format csv");
    REQUIRE(r.exit_code == 0);
    int vc[16][7] = {}, ac[16][7] = {};
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);  // header
    const int targets[] = {20, 30, 40, 50, 60, 70, 80};
    while (std::getline(lines, line)) {
        int def, target, vcell, acell;
        REQUIRE(std::sscanf(line.c_str(), "%d,%d,%d,%d", &def, &target, &vcell, &acell) == 4);
        int column = 0;
        while (targets[column] != target) ++column;
        vc[def][column] = vcell;
        ac[def][column] = acell;
    }
    for (int def = 2; def <= 15; ++def)
        for (int column = 0; column < 7; ++column) {
            if (column > 0) {
                CHECK(vc[def][column] >= vc[def][column - 1]);
                CHECK(ac[def][column] >= ac[def][column - 1]);
            }
            if (def > 2) {
                CHECK(vc[def][column] >= vc[def - 1][column]);
                CHECK(ac[def][column] >= ac[def - 1][column]);
            }
        }
}

TEST_CASE("engagement table includes the one-die specialization") {
    auto r = run_cli("table engagement -a 6 -d 6 --format rational");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1,1,1,1) 5/12") != std::string::npos);
    // With one-sided attacker dice every attacker-win row is zero.
    auto ones = run_cli("table engagement -a 1 -d 1 --format rational");
    CHECK(ones.output.find("(1,1,1,1) 0") != std::string::npos);
    CHECK(ones.output.find("(3,2,2,2) 0") != std::string::npos);
    CHECK(ones.output.find("(3,2,2,0) 1") != std::string::npos);
}

TEST_CASE("verify subcommand succeeds on the engagement scope") {
    auto r = run_cli("verify engagement");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verification passed") != std::string::npos);
    CHECK(run_cli("verify nonsense").exit_code == 2);
}
