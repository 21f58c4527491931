#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = zernike::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("format_real") {
  using zernike::cli::format_real;
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.7320508075688772) == "1.7320508075688772");
  CHECK(format_real(1e-300) == "1e-300");
}

TEST_CASE("convert") {
  CHECK(run({"convert", "--j", "46"}).out == "j=46 n=9 m=-1 k=4 ansi=49 r=1\n");
  CHECK(run({"convert", "--nm", "0,0"}).out == "j=1 n=0 m=0 k=0 ansi=0 r=1\n");
  CHECK(run({"convert", "--j", "49", "--scheme", "ansi"}).out == "j=46 n=9 m=-1 k=4 ansi=49 r=1\n");
  const Result bad = run({"convert", "--nm", "3,2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("parity") != std::string::npos);
  CHECK(run({"convert", "--j", "0"}).code == 1);
  CHECK(run({"convert"}).code == 1);
  CHECK(run({"convert", "--j", "3", "--nm", "1,1"}).code == 1);
  CHECK(run({"convert", "--nm", "x"}).code == 1);
}

TEST_CASE("expr") {
  CHECK(run({"expr", "--j", "11", "--format", "latex"}).out ==
        "\\sqrt{5}(6\\rho^{4} -6\\rho^{2} +1 )\n");
  CHECK(run({"expr", "--j", "1", "--format", "plain"}).out == "1\n");
  CHECK(run({"expr", "--j", "7", "--unnormalized"}).out == "(3\\rho^{3} -2\\rho )\\sin(\\theta)\n");
  CHECK(run({"expr", "--j", "12", "--format", "json"}).out ==
        R"({"j": 12, "n": 4, "m": -2, "radicand": 10, "coeffs": [4, -3], "powers": [4, 2], )"
        R"("angular_kind": "cosine", "angular_frequency": 2})"
        "\n");
  CHECK(run({"expr", "--j", "0"}).code == 1);
  CHECK(run({"expr", "--j", "3", "--format", "rtf"}).code == 1);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--j", "1", "--rho", "0.3", "--theta", "1.0"}).out == "1.0\n");
  CHECK(run({"eval", "--j", "2", "--rho", "0.5", "--theta", "0", "--unnormalized"}).out == "0.5\n");
  CHECK(run({"eval", "--j", "4", "--rho", "1", "--theta", "0"}).out.rfind("1.7320508", 0) == 0);
  const Result bad = run({"eval", "--j", "4", "--rho", "1.5", "--theta", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("rho") != std::string::npos);
}

TEST_CASE("table") {
  const auto dir = std::filesystem::temp_directory_path() / "zernike_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "t.tex").string();
  const Result five = run({"table", "--jmin", "5", "--jmax", "5", "--out", path});
  CHECK(five.code == 0);
  CHECK(five.out == "rows=1 file=" + path + "\n");
  CHECK(run({"table", "--jmin", "9", "--jmax", "3", "--out", path}).code == 1);
  CHECK(run({"table", "--out", (dir / "missing" / "x.tex").string()}).code == 2);
  const Result to_stdout = run({"table", "--jmin", "1", "--jmax", "2"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out.find("\\begin{longtable}") != std::string::npos);
  CHECK(to_stdout.out.find("\\documentclass") == std::string::npos);
  CHECK(to_stdout.err == "rows=2\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("check") {
  const Result pass = run({"check", "--jmax", "36", "--tol", "1e-8"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  CHECK(run({"check", "--jmax", "1", "--tol", "1e-12"}).code == 0);
  const Result alias = run({"check", "--jmax", "10", "--angular-nodes", "4"});
  CHECK(alias.code == 1);
  CHECK(alias.out.find("FAIL") != std::string::npos);
  CHECK(run({"check", "--radial-nodes", "1"}).code == 1);
}

TEST_CASE("invocations are deterministic") {
  CHECK(run({"expr", "--j", "46"}).out == run({"expr", "--j", "46"}).out);
  CHECK(run({"table", "--jmin", "1", "--jmax", "20"}).out ==
        run({"table", "--jmin", "1", "--jmax", "20"}).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
