#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <numbers>
#include <string>

#include <json.hpp>

#ifndef YBQ_CLI_PATH
#error "YBQ_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(YBQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify: default run passes with a full report") {
  const RunResult r = run("verify --trials 5 --seed 3");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["passed"].get<bool>());
  CHECK(doc["checks_run"].get<int>() >= 40);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("paper_anchor"));
    if (!c["informational"].get<bool>()) CHECK(c["pass"].get<bool>());
  }
}

TEST_CASE("verify: output is reproducible for a fixed seed") {
  const RunResult a = run("verify --trials 3 --seed 11");
  const RunResult b = run("verify --trials 3 --seed 11");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const RunResult c = run("verify --trials 3 --seed 12");
  CHECK(c.exit_code == 0);
  CHECK(a.out != c.out);  // different draws, different residuals
}

TEST_CASE("verify: trials 0 runs only the deterministic checks") {
  const RunResult r = run("verify --trials 0");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["passed"].get<bool>());
  for (const auto& c : doc["checks"]) {
    const std::string name = c["name"].get<std::string>();
    CHECK(name.find("random") == std::string::npos);
    CHECK(name != "ybe.grid");
  }
}

TEST_CASE("verify: the self-test fault is caught") {
  const RunResult r = run("verify --trials 3 --self-test-negative");
  CHECK(r.exit_code == 1);
  const json doc = json::parse(r.out);
  CHECK_FALSE(doc["passed"].get<bool>());
  bool ybe_failed = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "ybe.grid" && !c["pass"].get<bool>()) ybe_failed = true;
  CHECK(ybe_failed);
}

TEST_CASE("verify: informational records are present and never fatal") {
  const RunResult r = run("verify --trials 0");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  int info = 0, info_failed = 0;
  for (const auto& c : doc["checks"])
    if (c["informational"].get<bool>()) {
      ++info;
      if (!c["pass"].get<bool>()) ++info_failed;
    }
  CHECK(info >= 12);
  CHECK(info_failed >= 3);  // the printed eighth field component, per k
}

TEST_CASE("berry: reference run emits one record") {
  const RunResult r = run(
      "berry --theta 1.5707963267948966 --omega1 1 --omega2 2 "
      "--subsystem 1 --band + --steps 2048");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["numeric_phase"].get<double>() ==
        doctest::Approx(-0.17967).epsilon(1e-4));
  CHECK(doc["analytic_phase"].get<double>() ==
        doctest::Approx(-0.1796706948).epsilon(1e-9));
  CHECK(doc["steps"].get<int>() == 2048);
  CHECK(doc["richardson_estimate"].get<double>() < 1e-4);
}

TEST_CASE("berry: zero band, degenerate input, bad band") {
  const RunResult zero = run("berry --theta 0.9 --band 0 --steps 64");
  CHECK(zero.exit_code == 0);
  CHECK(std::abs(json::parse(zero.out)["numeric_phase"].get<double>()) <
        1e-8);

  CHECK(run("berry --theta 0 --band +").exit_code == 3);
  CHECK(run("berry --theta 0.9 --band x").exit_code == 2);
}

TEST_CASE("negativity-sweep: seven-point grid over [0, pi]") {
  const RunResult r = run(
      "negativity-sweep --steps 7 --theta-min 0 "
      "--theta-max 3.141592653589793 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "theta,negativity_closed,negativity_numeric,abs_diff");
  int rows = 0;
  bool has_unit_row = false, zero_row_ok = false;
  for (std::string line; std::getline(lines, line);) {
    double theta, closed, numeric, diff;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &theta, &closed,
                        &numeric, &diff) == 4);
    CHECK(diff < 1e-10);
    if (std::abs(closed - 1.0) < 1e-10) has_unit_row = true;
    if (rows == 0) zero_row_ok = closed == 0.0 && numeric < 1e-12;
    ++rows;
  }
  CHECK(rows == 7);
  CHECK(has_unit_row);  // theta = pi/3 sits on this grid
  CHECK(zero_row_ok);
}

TEST_CASE("rmatrix: identity at theta 0, orderings differ by permutation") {
  const RunResult r = run("rmatrix --theta 0 --format json");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["matrix"]["rows"] == 9);
  const auto& entries = doc["matrix"]["entries"];
  REQUIRE(entries.size() == 81);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const double re = entries[9 * i + j][0].get<double>();
      CHECK(re == doctest::Approx(i == j ? 1.0 : 0.0));
    }

  const RunResult lex = run("rmatrix --theta 0.9 --phi1 0.4 --order lex");
  const RunResult pap = run("rmatrix --theta 0.9 --phi1 0.4 --order paper");
  CHECK(lex.exit_code == 0);
  CHECK(pap.exit_code == 0);
  CHECK(lex.out != pap.out);
  // row |10> of the display order: entry at column |-1-1> is a Q / 3
  const json pdoc = json::parse(pap.out);
  const auto& pe = pdoc["matrix"]["entries"];
  const double re18 = pe[9 * 1 + 8][0].get<double>();
  CHECK(std::abs(re18) > 1e-3);
}

TEST_CASE("rmatrix: csv layout has re/im column pairs") {
  const RunResult r = run("rmatrix --theta 0.5 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.substr(0, 10) == "c0_re,c0_i");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("spectrum: closed form equals numeric in the report") {
  const RunResult r =
      run("spectrum --theta 1.5707963267948966 --omega1 1 --omega2 2 --t 0");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["subsystems"].size() == 3);
  const auto& first = doc["subsystems"][0];
  CHECK(first["subsystem"] == 1);
  CHECK(first["closed"][0].get<double>() ==
        doctest::Approx(-2.8284271247).epsilon(1e-9));
  for (const auto& sub : doc["subsystems"])
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(sub["closed"][i].get<double>() -
                     sub["numeric"][i].get<double>()) < 1e-10);
}

TEST_CASE("blocks: csv export carries all sections") {
  const RunResult r =
      run("blocks --theta 0.9 --omega1 1 --omega2 2 --t 0.5 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("matrix,row,col,re,im") == 0);
  CHECK(r.out.find("\nh,") != std::string::npos);
  CHECK(r.out.find("\nh1,") != std::string::npos);
  CHECK(r.out.find("\nh3,") != std::string::npos);
  CHECK(r.out.find("\nblock_diagonal,") != std::string::npos);
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("berry --no-such-flag 1").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required
  CHECK(run("berry --subsystem 7").exit_code == 2);
}
