// Acceptance suite: runs the full verification battery at its stated scales
// and tolerances. One line is printed per criterion; every criterion must
// pass. Also checks the CLI's byte-level determinism contract by invoking
// the built binary twice.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <riemann/verify.hpp>

using namespace riemann;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("full verification battery") {
    auto results = run_verification(std::cout, /*quick=*/false, /*seed=*/0);
    REQUIRE(results.size() == 9);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

#ifdef RIEMANN_CLI_PATH
TEST_CASE("verify --quick is byte-identical across runs") {
    std::string cli = RIEMANN_CLI_PATH;
    std::string out_a = "/tmp/riemann_verify_a.txt";
    std::string out_b = "/tmp/riemann_verify_b.txt";
    std::string cmd_a = cli + " verify --quick --seed 5 > " + out_a + " 2>&1";
    std::string cmd_b = cli + " verify --quick --seed 5 > " + out_b + " 2>&1";
    REQUIRE(std::system(cmd_a.c_str()) == 0);
    REQUIRE(std::system(cmd_b.c_str()) == 0);
    std::string a = slurp(out_a);
    std::string b = slurp(out_b);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
}
#endif
