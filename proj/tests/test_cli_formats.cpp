#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <riemann/function_spec.hpp>
#include <riemann/io.hpp>
#include <riemann/wiener.hpp>

using namespace riemann;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
#ifdef RIEMANN_CLI_PATH
    std::string cmd = std::string(RIEMANN_CLI_PATH) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    CommandResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe.get()))
        r.output.append(buf.data(), got);
    int status = pclose(pipe.release());
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
#else
    FAIL("CLI path not configured");
    return {};
#endif
}

}  // namespace

TEST_CASE("function spec JSON round-trip") {
    for (const char* text : {
             R"({"kind":"polynomial","coefficients":[0.0,1.0,2.5]})",
             R"({"kind":"sine","frequency":2.0,"amplitude":0.5})",
             R"({"kind":"kink","knot":0.25})",
             R"({"kind":"weierstrass","a":0.5,"b":3,"truncation_epsilon":1e-12})",
         }) {
        FunctionSpec spec = spec_from_json(nlohmann::json::parse(text));
        FunctionSpec again = spec_from_json(spec_to_json(spec));
        for (double x : {0.0, 0.125, 0.5, 0.875, 1.0})
            CHECK(spec.eval(x) == again.eval(x));
    }
    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"kind":"mystery"})")),
                    std::invalid_argument);
}

TEST_CASE("format_real is 12 significant digits") {
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1e-15) == "1e-15");
    CHECK(format_real(0.0) == "0");
}

TEST_CASE("path CSV export") {
    GridPath path = sample_grid_path({0.25, 0.5, 1.0}, 11, 3);
    std::ostringstream ss;
    write_path_csv(ss, path);
    std::istringstream in(ss.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "point,value");
    std::getline(in, line);
    CHECK(line.substr(0, 5) == "0.25,");
    int rows = 1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
}

#ifdef RIEMANN_CLI_PATH

TEST_CASE("covariance subcommand values and exit codes") {
    CommandResult r = run_cli("covariance --s 1 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("23/60") != std::string::npos);
    CHECK(r.output.find("7/30") != std::string::npos);
    CHECK(r.output.find("ok") != std::string::npos);

    CommandResult zeros = run_cli("covariance --n 1");
    CHECK(zeros.exit_code == 0);
    CHECK(zeros.output.find("1,0,0,0,1/2") != std::string::npos);

    CHECK(run_cli("covariance").exit_code == 2);
    CHECK(run_cli("covariance --n bogus").exit_code == 2);
    CHECK(run_cli("--no-such-flag").exit_code == 2);
}

TEST_CASE("sequence subcommand") {
    CommandResult r =
        run_cli(R"(sequence --spec {\"kind\":\"polynomial\",\"coefficients\":[0,1]} --n 2..10)");
    CHECK(r.exit_code == 0);
    // identity function: every y_n is exactly 0.5
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);  // header
    int checked = 0;
    while (std::getline(in, line)) {
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        auto c3 = line.find(',', c2 + 1);
        CHECK(line.substr(c2 + 1, c3 - c2 - 1) == "0.5");
        ++checked;
    }
    CHECK(checked == 9);

    CommandResult sq =
        run_cli(R"(sequence --spec {\"kind\":\"polynomial\",\"coefficients\":[0,0,1]} --n 2..2)");
    CHECK(sq.exit_code == 0);
    CHECK(sq.output.find("0.305555555556") != std::string::npos);

    CHECK(run_cli("sequence --spec not-json").exit_code == 2);
    CHECK(run_cli(R"(sequence --spec {\"kind\":\"zigzag\"})").exit_code == 2);
}

TEST_CASE("simulate subcommand determinism and verdicts") {
    CommandResult a = run_cli("simulate --s 1 --samples 2000 --seed 7");
    CommandResult b = run_cli("simulate --s 1 --samples 2000 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("7/30") != std::string::npos);
    CHECK(a.output.find("pass") != std::string::npos);

    CHECK(run_cli("simulate --samples 10").exit_code == 2);
}

TEST_CASE("json output format") {
    CommandResult r = run_cli("covariance --s 1 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json arr = nlohmann::json::parse(r.output);
    REQUIRE(arr.is_array());
    CHECK(arr[0]["ey4s_y2s"] == "23/60");
    CHECK(arr[0]["var_ydiff"] == "7/30");
}

TEST_CASE("--out writes the same bytes as stdout") {
    std::string path = "/tmp/riemann_cov_out.csv";
    CommandResult direct = run_cli("covariance --n 2..5");
    CommandResult filed = run_cli("covariance --n 2..5 --out " + path);
    CHECK(filed.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.output);
    std::remove(path.c_str());
}

#endif  // RIEMANN_CLI_PATH
