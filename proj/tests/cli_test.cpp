#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cabform/io.hpp"

using namespace cabform;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult runCli(const std::string& args) {
  const std::string command = std::string(CABFORM_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const fs::path& fixtureDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "cabform_cli_fixtures";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string writeFixture(const std::string& name, const std::string& content) {
  const fs::path path = fixtureDir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

const std::string& ellipticPath() {
  static const std::string path = writeFixture("elliptic.json", R"({
    "a": 2, "b": 3,
    "coefficients": [
      {"i": 0, "j": 2, "value": "1"},
      {"i": 3, "j": 0, "value": "-1"},
      {"i": 0, "j": 0, "value": "-1"}
    ]})");
  return path;
}

const std::string& cyclic34Path() {
  static const std::string path = writeFixture("cyclic34.json", R"({
    "a": 3, "b": 4,
    "coefficients": [
      {"i": 0, "j": 3, "value": "1"},
      {"i": 0, "j": 0, "value": "symbolic"},
      {"i": 1, "j": 0, "value": "symbolic"},
      {"i": 2, "j": 0, "value": "symbolic"},
      {"i": 3, "j": 0, "value": "symbolic"},
      {"i": 4, "j": 0, "value": "symbolic"}
    ]})");
  return path;
}

const std::string& notCoprimePath() {
  static const std::string path = writeFixture("bad_gcd.json", R"({
    "a": 2, "b": 4,
    "coefficients": [
      {"i": 0, "j": 2, "value": "1"},
      {"i": 4, "j": 0, "value": "1"}
    ]})");
  return path;
}

}  // namespace

TEST_CASE("cli info") {
  const CliResult r = runCli("info --curve " + cyclic34Path());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("genus = 3") != std::string::npos);
  CHECK(r.output.find("du:0,0  order 5") != std::string::npos);
  CHECK(r.output.find("du:1,0  order 2") != std::string::npos);
  CHECK(r.output.find("du:0,1  order 1") != std::string::npos);

  const CliResult j = runCli("info --format json --curve " + cyclic34Path());
  CHECK(j.exit_code == 0);
  const Json parsed = Json::parse(j.output);
  CHECK(parsed["genus"] == 3);
  CHECK(parsed["basis"].size() == 3);
  CHECK(parsed["basis"][0]["order"] == 5);

  const CliResult e = runCli("info --curve " + ellipticPath());
  CHECK(e.exit_code == 0);
  CHECK(e.output.find("genus = 1") != std::string::npos);
  CHECK(e.output.find("du:0,0  order 1") != std::string::npos);
}

TEST_CASE("cli rejects invalid curves with exit code 2") {
  const CliResult r = runCli("info --curve " + notCoprimePath());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("a and b must be coprime") != std::string::npos);

  const std::string missing_monic = writeFixture("missing_monic.json", R"({
    "a": 2, "b": 3,
    "coefficients": [{"i": 3, "j": 0, "value": "1"}]})");
  CHECK(runCli("info --curve " + missing_monic).exit_code == 2);

  const std::string garbage = writeFixture("garbage.json", "not json");
  CHECK(runCli("info --curve " + garbage).exit_code == 2);

  CHECK(runCli("info --curve /nonexistent/curve.json").exit_code == 2);
  CHECK(runCli("frobnicate --curve " + ellipticPath()).exit_code == 2);
  CHECK(runCli("verify --curve " + ellipticPath() + " --checks bogus").exit_code == 2);
}

TEST_CASE("cli basis") {
  const CliResult r = runCli("basis --curve " + cyclic34Path());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("denominator: F_y(x,y)") != std::string::npos);
  CHECK(r.output.find("du:0,0 = 1  (order 5)") != std::string::npos);
  CHECK(r.output.find("du:1,0 = x  (order 2)") != std::string::npos);
  CHECK(r.output.find("du:0,1 = y  (order 1)") != std::string::npos);
}

TEST_CASE("cli second-kind") {
  const CliResult r = runCli("second-kind --curve " + ellipticPath());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("denominator: F_w(z,w)") != std::string::npos);
  CHECK(r.output.find("r:0,0 = z") != std::string::npos);

  const CliResult j = runCli("second-kind --format json --curve " + cyclic34Path());
  CHECK(j.exit_code == 0);
  const Json parsed = Json::parse(j.output);
  CHECK(parsed["denominator"] == "F_w(z,w)");
  const CurveSpec cyc = curveFromFile(cyclic34Path());
  const SecondKindBasis basis = secondKindBasis(cyc);
  REQUIRE(parsed["entries"].size() == 3);
  for (const auto& entry : parsed["entries"]) {
    const Polynomial parsed_poly = polynomialFromJson(entry["numerator"]);
    CHECK(parsed_poly ==
          basis.numerator(entry["i"].get<int>(), entry["j"].get<int>()));
  }
}

TEST_CASE("cli two-form") {
  const CliResult r = runCli("two-form --curve " + ellipticPath());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("G = x^2*z + x*z^2 + 2*y*w + 2") != std::string::npos);

  const CliResult j = runCli("two-form --format json --curve " + ellipticPath());
  const Json parsed = Json::parse(j.output);
  const CurveSpec ell = curveFromFile(ellipticPath());
  CHECK(polynomialFromJson(parsed["numerator"]) == fundamentalForm(ell).numerator);
}

TEST_CASE("cli verify exit codes") {
  CHECK(runCli("verify --curve " + cyclic34Path()).exit_code == 0);
  CHECK(runCli("verify --curve " + ellipticPath()).exit_code == 0);

  const CliResult printed =
      runCli("verify --region printed --curve " + ellipticPath());
  CHECK(printed.exit_code == 1);
  CHECK(printed.output.find("symmetry: fail") != std::string::npos);

  const CliResult selected =
      runCli("verify --checks prop2 --format json --curve " + ellipticPath());
  CHECK(selected.exit_code == 0);
  // a single JSON line naming the canonical check
  const Json line = Json::parse(selected.output);
  CHECK(line["check"] == "block-pairs");
  CHECK(line["status"] == "pass");
}

TEST_CASE("cli output is byte-identical across runs") {
  for (const std::string cmd :
       {"info --format json --curve " + cyclic34Path(),
        "basis --curve " + cyclic34Path(),
        "second-kind --format json --curve " + cyclic34Path(),
        "two-form --format json --curve " + ellipticPath()}) {
    const CliResult first = runCli(cmd);
    const CliResult second = runCli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
  }
}
