#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = "BJOP_COLOR=never " + std::string(BJOP_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("quantize command") {
  CHECK(run("quantize \"x^2*xi^2\"").out == "x^2*D^2 - 2*i*x*D - 2/3\n");
  CHECK(run("quantize \"x^2*xi^2\"").exit_code == 0);
  CHECK(run("quantize \"x^2*xi^2\" --rule bj").out == "x^2*D^2 - 2*i*x*D - 2/3\n");
  CHECK(run("quantize \"x^2*xi^2\" --rule weyl").out == "x^2*D^2 - 2*i*x*D - 1/2\n");
  CHECK(run("quantize \"x*xi\" --rule tau=0").out == "x*D\n");
  CHECK(run("quantize \"x*xi\"").out == "x*D - 1/2*i\n");
  CHECK(run("quantize \"x1*xi2\" --dim 2").out == "x1*D2\n");
}

TEST_CASE("poisson command") {
  CHECK(run("poisson \"x^3\" \"xi^3\"").out == "9*x^2*xi^2\n");
  CHECK(run("poisson x xi").out == "1\n");
  CHECK(run("poisson \"x^2*xi\" \"x*xi^2\"").out == "3*x^2*xi^2\n");
}

TEST_CASE("commutator command") {
  CHECK(run("commutator x xi").out == "i\n");
  // [x^3, D^3] under any rule on split symbols
  CHECK(run("commutator \"x^3\" \"xi^3\" --rule bj").out ==
        "9*i*x^2*D^2 + 18*x*D - 6*i\n");
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run("quantize \"x^\"").exit_code == 2);
  CHECK(run("quantize \"x3\" --dim 2").exit_code == 2);
  CHECK(run("quantize \"x*xi\" --rule nope").exit_code == 2);
  CHECK(run("verify bogus_suite").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("grid export gaussian --out /nonexistent_dir_zz/u.csv").exit_code == 2);
}

TEST_CASE("verify command") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bjop_cli_test";
  fs::create_directories(dir);
  const std::string json_path = (dir / "gvh.json").string();

  const RunResult r = run("verify gvh --json " + json_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite gvh") != std::string::npos);
  CHECK(r.out.find("overall: PASS") != std::string::npos);

  std::ifstream in(json_path);
  REQUIRE(in.good());
  nlohmann::json parsed;
  in >> parsed;
  REQUIRE(parsed.is_array());
  CHECK(parsed[0].at("name") == "gvh");
  CHECK(parsed[0].at("passed") == true);
  bool has_lhs = false, has_rhs = false;
  for (const auto& d : parsed[0].at("details")) {
    if (d.at("quantity") == "lhs_const_term") {
      has_lhs = true;
      CHECK(d.at("expected").get<double>() == doctest::Approx(-2.0 / 3).epsilon(1e-15));
    }
    if (d.at("quantity") == "rhs_const_term") {
      has_rhs = true;
      CHECK(d.at("expected").get<double>() == doctest::Approx(-1.0 / 3).epsilon(1e-15));
    }
  }
  CHECK(has_lhs);
  CHECK(has_rhs);

  // stdout is byte-identical across runs
  const RunResult again = run("verify gvh");
  CHECK(run("verify gvh").out == again.out);

  // the weyl flavor of the dirac suite reports mismatch ratios and passes
  const RunResult weyl = run("verify dirac_grid --rule weyl");
  CHECK(weyl.exit_code == 0);
  CHECK(weyl.out.find("ratio") != std::string::npos);

  // json output is deterministic apart from the timing field
  const std::string j1 = (dir / "a.json").string();
  const std::string j2 = (dir / "b.json").string();
  REQUIRE(run("verify unitary_family --json " + j1).exit_code == 0);
  REQUIRE(run("verify unitary_family --json " + j2).exit_code == 0);
  nlohmann::json a, b;
  std::ifstream(j1) >> a;
  std::ifstream(j2) >> b;
  for (auto& r : a) r.erase("elapsed_s");
  for (auto& r : b) r.erase("elapsed_s");
  CHECK(a.dump() == b.dump());

  fs::remove_all(dir);
}

TEST_CASE("a failed verification exits with 1") {
  // a grid too small to resolve the gaussian breaks the off-lattice
  // reflection rows, which rely on band-limited data
  const RunResult r = run("verify unitary_family --N 16 --L 4.0");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("grid export command") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bjop_cli_grid";
  fs::create_directories(dir);

  const std::string csv = (dir / "g.csv").string();
  CHECK(run("grid export gaussian --out " + csv).exit_code == 0);
  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,x,re,im");
  int rows = 0;
  double norm2 = 0, x_prev = 0, dx = 0;
  std::string line;
  while (std::getline(in, line)) {
    int idx;
    double x, re, im;
    REQUIRE(std::sscanf(line.c_str(), "%d,%lg,%lg,%lg", &idx, &x, &re, &im) == 4);
    if (rows == 1) dx = x - x_prev;
    x_prev = x;
    norm2 += re * re + im * im;
    ++rows;
  }
  CHECK(rows == 256);
  norm2 *= dx;
  // discrete norm of e^{-x^2/2} vs the analytic pi^{1/4}
  CHECK(std::abs(std::sqrt(norm2) - std::pow(3.141592653589793, 0.25)) <= 1e-10);

  const std::string json = (dir / "w.json").string();
  CHECK(run("grid export planewave:4 --out " + json + " --format json").exit_code == 0);
  std::ifstream jin(json);
  nlohmann::json parsed;
  jin >> parsed;
  CHECK(parsed.at("grid").at("N") == 256);
  for (std::size_t m = 0; m < 256; ++m) {
    const double re = parsed.at("re")[m].get<double>();
    const double im = parsed.at("im")[m].get<double>();
    CHECK(std::abs(std::hypot(re, im) - 1.0) <= 1e-14);
  }

  const std::string h = (dir / "h.csv").string();
  CHECK(run("grid export hermite1 --out " + h).exit_code == 0);

  fs::remove_all(dir);
}
