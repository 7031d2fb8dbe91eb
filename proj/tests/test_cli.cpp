#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "report.hpp"

using namespace spinrep;
using spinrep::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "spinrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

const char* kRotation12 = "1,0,0,0,0,0,-1,0,0,1,0,0,0,0,0,1";
const char* kStretch = "1,0,0,0,0,2,0,0,0,0,1,0,0,0,0,1";

}  // namespace

TEST_CASE("parse_matrix accepts presets, inline lists and JSON files") {
  CHECK(cli::parse_matrix("minkowski+---") == Metric::minkowski().matrix());
  CHECK(cli::parse_matrix("minkowski-+++") == (-Metric::minkowski().matrix()).eval());

  const Mat4r m = cli::parse_matrix("1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16");
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 5);
  CHECK(m(3, 3) == 16);
  CHECK(cli::parse_matrix(" 1e0, 0,0,0, 0,-1,0,0, 0,0,-1,0, 0,0,0,-1 ") == Metric::minkowski().matrix());

  const std::string path = "test_cli_matrix.json";
  {
    std::ofstream f(path);
    f << R"({"matrix": [[1,0,0,0],[0,-1,0,0],[0,0,-1,0],[0,0,0,-1]]})";
  }
  CHECK(cli::parse_matrix(path) == Metric::minkowski().matrix());
  std::remove(path.c_str());

  CHECK_THROWS_AS(cli::parse_matrix("1,2,3"), ConfigError);
  CHECK_THROWS_AS(cli::parse_matrix("1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,x"), ConfigError);
  CHECK_THROWS_AS(cli::parse_matrix("1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17"), ConfigError);
  CHECK_THROWS_AS(cli::parse_matrix("euclidean"), ConfigError);
  CHECK_THROWS_AS(cli::parse_matrix("1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,nan"), ConfigError);
}

TEST_CASE("parse_metric rejects asymmetric and degenerate input") {
  CHECK_THROWS_AS(cli::parse_metric("1,1,0,0,0,-1,0,0,0,0,-1,0,0,0,0,-1"), ConfigError);
  CHECK_THROWS_AS(cli::parse_metric("1,0,0,0,0,-1,0,0,0,0,-1,0,0,0,0,0"), ConfigError);
  CHECK(cli::parse_metric("minkowski+---").is_diagonal());
}

TEST_CASE("verify on the default preset passes with schema fields") {
  const auto r = call({"verify", "--json"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "spinrep-report/1");
  CHECK(j["command"] == "verify");
  CHECK(j["seed"] == 42);
  CHECK(j["metric"]["name"] == "minkowski+---");
  CHECK(j["metric"]["matrix"][1][1] == -1.0);
  CHECK(j["samples"] == 50);
  CHECK(j["suites"].size() == 6);
  CHECK(j["skipped"].empty());
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j.contains("tolerances"));
  CHECK(j.contains("elapsed_ms"));
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("suite"));
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("residual"));
    CHECK(c.contains("samples"));
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  const auto a = call({"verify", "--json", "--seed", "7", "--samples", "10"});
  const auto b = call({"verify", "--json", "--seed", "7", "--samples", "10"});
  REQUIRE(a.code == cli::kPass);
  CHECK(strip_timing(Json::parse(a.out)) == strip_timing(Json::parse(b.out)));

  const auto c = call({"verify", "--json", "--seed", "8", "--samples", "10"});
  CHECK(strip_timing(Json::parse(a.out)) != strip_timing(Json::parse(c.out)));
}

TEST_CASE("suite selection lists the rest as skipped") {
  const auto r = call({"verify", "--json", "--suite", "grassmann,iso"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j["suites"] == Json::array({"grassmann", "iso"}));
  CHECK(j["skipped"].size() == 4);
  for (const auto& s : j["skipped"]) CHECK(s["reason"] == "not selected");
  for (const auto& c : j["checks"]) CHECK((c["suite"] == "grassmann" || c["suite"] == "iso"));
}

TEST_CASE("suites needing Dirac matrices are skipped for a Euclidean metric") {
  const auto r = call({"verify", "--json", "--metric", "1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1"});
  CHECK(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  std::vector<std::string> skipped;
  for (const auto& s : j["skipped"]) skipped.push_back(s["name"]);
  CHECK(skipped == std::vector<std::string>{"dirac", "iso", "proposition", "transforms"});
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("the mostly-plus preset passes") {
  const auto r = call({"verify", "--metric", "minkowski-+++", "--samples", "10"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(call({}).code == cli::kConfigError);
  CHECK(call({"frobnicate"}).code == cli::kConfigError);
  CHECK(call({"verify", "--metric", "1,2,3"}).code == cli::kConfigError);
  CHECK(call({"verify", "--metric", "1,0,0,0,0,-1,0,0,0,0,-1,0,0,0,0,0"}).code == cli::kConfigError);
  CHECK(call({"verify", "--suite", "nonsense"}).code == cli::kConfigError);
  CHECK(call({"verify", "--tol", "-1"}).code == cli::kConfigError);
  CHECK(call({"verify", "--samples", "0"}).code == cli::kConfigError);
  CHECK(call({"verify", "--seed", "abc"}).code == cli::kConfigError);
  CHECK(call({"lift"}).code == cli::kConfigError);
  CHECK(call({"lift", "1,2"}).code == cli::kConfigError);
  CHECK(call({"table", "spinors"}).code == cli::kConfigError);

  const auto degenerate = call({"verify", "--metric", "0,0,0,0,0,-1,0,0,0,0,-1,0,0,0,0,-1"});
  CHECK(degenerate.code == cli::kConfigError);
  CHECK(degenerate.err.find("DegenerateMetric") != std::string::npos);
  CHECK(call({"--help"}).code == cli::kPass);
}

TEST_CASE("lift of an isometry") {
  const auto r = call({"lift", kRotation12, "--json"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "spinrep-report/1");
  CHECK(j["command"] == "lift");
  CHECK(j["status"] == "pass");
  CHECK(j["isometry"] == true);
  CHECK(j["lift"]["even"] == true);
  CHECK(j["lift"]["residual"].get<double>() < 1e-10);
  // Rotation by a right angle in the (1,2) plane: (1 + γ12)/√2.
  const Json& sigma = j["lift"]["sigma"];
  REQUIRE(sigma.size() == 2);
  CHECK(sigma[0]["blade"] == "1");
  CHECK(sigma[1]["blade"] == "γ12");
  CHECK(sigma[0]["re"].get<double>() == doctest::Approx(std::sqrt(0.5)));
  CHECK(sigma[1]["re"].get<double>() == doctest::Approx(std::sqrt(0.5)));

  // The inverse rotation flips the bivector: (1 - γ12)/√2.
  const Json inv = Json::parse(call({"lift", "1,0,0,0,0,0,1,0,0,-1,0,0,0,0,0,1", "--json"}).out);
  CHECK(inv["lift"]["sigma"][1]["re"].get<double>() == doctest::Approx(-std::sqrt(0.5)));

  const auto text = call({"lift", kRotation12});
  CHECK(text.out.find("even") != std::string::npos);
  CHECK(text.out.find("γ12") != std::string::npos);
}

TEST_CASE("lift of a non-isometry reports no lift") {
  const auto r = call({"lift", kStretch});
  CHECK(r.code == cli::kCheckFailure);
  CHECK(r.out.find("not an isometry") != std::string::npos);

  const auto j = Json::parse(call({"lift", kStretch, "--json"}).out);
  CHECK(j["status"] == "fail");
  CHECK(j["isometry"] == false);
  CHECK(j["lift"].is_null());
  CHECK(j["null_space_trivial"] == true);
  CHECK(j["smallest_singular"].get<double>() > 1e-6);
}

TEST_CASE("tables") {
  const auto hodge = call({"table", "hodge", "--json"});
  REQUIRE(hodge.code == cli::kPass);
  const Json h = Json::parse(hodge.out);
  CHECK(h["schema"] == "spinrep-report/1");
  CHECK(h["double_star"].size() == 5);

  const auto clifford = call({"table", "clifford", "--json"});
  REQUIRE(clifford.code == cli::kPass);
  const Json c = Json::parse(clifford.out);
  REQUIRE(c["labels"].size() == 16);
  CHECK(c["labels"][15] == "γ0123");
  CHECK(c["entries"][1][1] == "+1");
  CHECK(c["entries"][2][2] == "-1");

  const Json w = Json::parse(call({"table", "wedge", "--json"}).out);
  CHECK(w["entries"][1][1] == "0");
  CHECK(w["entries"][1][2] == "+γ01");
}
