#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "trigspline/trigpoly.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = trigspline::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("trigspline_test_" + std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path_ / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

const char* kSpec9 = R"({"N":9, "I1":0, "I2":0, "r":3, "nu":"nu1",
                         "gamma":[1,1,1], "eta":[1,1,1]})";

std::string expsin_csv(int big_n) {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < big_n; ++i)
        os << std::exp(std::sin(2.0 * std::numbers::pi_v<double> * i / big_n)) << "\n";
    return os.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("nodes prints the documented values") {
    const CliResult r = run_cli({"nodes", "--N", "3", "--indicator", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "t\n0\n2.0943951023931953\n4.1887902047863905\n");
}

TEST_CASE("coeffs on the unit impulse") {
    TempDir dir;
    const std::string in = dir.file("f.csv", "value\n1\n0\n0\n");
    const CliResult r = run_cli({"coeffs", "--in", in, "--indicator", "0"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["a0"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(j["a"][0].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(j["b"][0].get<double>()) <= 1e-16);
}

TEST_CASE("coeffs accepts and validates a t column") {
    TempDir dir;
    const std::string good = dir.file("tv.csv", "t,value\n0,1\n2.0943951023931953,0\n4.1887902047863905,0\n");
    CHECK(run_cli({"coeffs", "--in", good, "--indicator", "0"}).code == 0);
    const std::string bad = dir.file("bad.csv", "t,value\n0,1\n2.0,0\n4.1887902047863905,0\n");
    const CliResult r = run_cli({"coeffs", "--in", bad, "--indicator", "0"});
    CHECK(r.code == 2);
}

TEST_CASE("eval with the collapsed spline reproduces the polynomial") {
    TempDir dir;
    const std::string spec = dir.file("s.json",
        R"({"N":9, "I1":0, "I2":0, "r":3, "nu":"nu1", "gamma":[1,0,0], "eta":[1,0,0]})");
    const std::string in = dir.file("f.csv", expsin_csv(9));
    const CliResult r =
        run_cli({"eval", "--spec", spec, "--in", in, "--t0", "0", "--t1", "6.2831853", "--points", "4"});
    CHECK(r.code == 0);

    using namespace trigspline;
    const UniformGrid grid = make_grid(9, Indicator::I0);
    std::vector<double> f(9);
    for (int i = 0; i < 9; ++i)
        f[static_cast<size_t>(i)] = std::exp(std::sin(2.0 * std::numbers::pi_v<double> * i / 9));
    const FourierCoeffs c = dft_coeffs(SampleSet(grid, f));

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,value");
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        const double t = std::stod(line.substr(0, comma));
        const double v = std::stod(line.substr(comma + 1));
        CHECK(std::abs(v - eval_trig_poly(c, t)) <= 1e-12);
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("compare against the cubic oracle") {
    TempDir dir;
    const std::string spec = dir.file("s.json", kSpec9);
    const std::string in = dir.file("f.csv", expsin_csv(9));
    const CliResult r = run_cli({"compare", "--spec", spec, "--in", in, "--oracle", "cubic",
                                 "--points", "400"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["sup_err"].get<double>() <= 1e-8);
    CHECK(j["l2_err"].get<double>() <= 1e-8);
}

TEST_CASE("moments cross-check") {
    TempDir dir;
    const std::string in = dir.file("f.csv", expsin_csv(9));
    const CliResult r = run_cli({"moments", "--in", in});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["cyclic"].size() == 9);
    CHECK(j["trig"].size() == 9);
    CHECK(j["max_rel_diff"].get<double>() <= 1e-6);
}

TEST_CASE("sweep emits the full default grid") {
    TempDir dir;
    const std::string in = dir.file("f.csv", expsin_csv(9));
    const CliResult r = run_cli({"sweep", "--in", in, "--r", "3", "--nu", "nu1", "--deriv", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "g1,g2,g3,power,flag");
    int rows = 0, ok = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find(",ok") != std::string::npos) ++ok;
    }
    CHECK(rows == 36);
    CHECK(ok == 36);
    CHECK(r.err.find("baseline_power=") != std::string::npos);
}

TEST_CASE("convergence emits CSV plus a JSON summary") {
    const CliResult r = run_cli({"convergence", "--fn", "expsin", "--r", "3", "--nu", "nu1",
                                 "--Ns", "9,17,35"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "N,sup_err");
    std::string last;
    int rows = 0;
    while (std::getline(lines, line)) {
        last = line;
        ++rows;
    }
    CHECK(rows == 4); // 3 CSV rows + JSON summary
    const json j = json::parse(last);
    CHECK(j["order"].get<double>() >= 3.5);
    CHECK(j["order"].get<double>() <= 4.5);
}

TEST_CASE("identical invocations produce identical bytes") {
    TempDir dir;
    const std::string spec = dir.file("s.json", kSpec9);
    const std::string in = dir.file("f.csv", expsin_csv(9));
    const std::vector<std::string> args{"eval", "--spec", spec, "--in", in, "--points", "64"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run_cli({"nodes", "--N", "3"}).code == 2);            // missing flag
    CHECK(run_cli({"frobnicate"}).code == 2);                   // unknown subcommand
    CHECK(run_cli({"nodes", "--N", "4", "--indicator", "0"}).code == 2);

    // Degenerate interpolation factor: gamma3 = -1 / sum_m nu3_{3m-1}(2)
    // cancels the leading term nu3_1(2) = 1 exactly.
    const std::string in3 = dir.file("f3.csv", "1\n0\n0\n");
    const std::string degenerate = dir.file("deg.json",
        R"({"N":3, "I1":0, "I2":0, "r":2, "nu":"nu3", "gamma":[1,0,-7.31228098628292])"
        R"(, "eta":[1,1,1]})");
    const CliResult r = run_cli({"eval", "--spec", degenerate, "--in", in3, "--points", "2"});
    CHECK(r.code == 3);

    // Env override must be validated.
    setenv("TRIGSPLINE_TAIL_TOL", "not-a-number", 1);
    CHECK(run_cli({"coeffs", "--in", in3, "--indicator", "0"}).code == 2);
    unsetenv("TRIGSPLINE_TAIL_TOL");
}

TEST_CASE("help returns success") {
    CHECK(run_cli({"--help"}).code == 0);
}

} // TEST_SUITE
