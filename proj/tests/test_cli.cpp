#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "u1kepler/cli.hpp"
#include "u1kepler/exact.hpp"

using namespace u1kepler;
using cli::Command;
using cli::OutputFormat;
using cli::RunConfig;

namespace {

struct RunOutcome {
  int status;
  std::string out;
  std::string diag;
};

RunOutcome invoke(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream diag;
  const int status = cli::run(config, out, diag);
  return {status, out.str(), diag.str()};
}

}  // namespace

TEST_CASE("spectrum csv matches the hydrogen table") {
  RunConfig config;
  config.command = Command::spectrum;
  config.n = 2;
  config.sigma_bar = 0;
  config.levels = 3;
  config.format = OutputFormat::csv;
  const auto result = invoke(config);
  CHECK(result.status == 0);
  CHECK(result.out ==
        "I,energy_exact,energy_float,degeneracy,left_ktype,right_ktype\n"
        "0,-1/2,-0.5,1,[-1/2 -1/2],[1/2 1/2]\n"
        "1,-1/8,-0.125,4,[-1/2 -3/2],[3/2 1/2]\n"
        "2,-1/18,-0.05555555555555555,9,[-1/2 -5/2],[5/2 1/2]\n");

  SUBCASE("byte-identical on repeat") {
    CHECK(invoke(config).out == result.out);
  }
}

TEST_CASE("spectrum json carries exact and float renderings") {
  RunConfig config;
  config.command = Command::spectrum;
  config.levels = 2;
  config.format = OutputFormat::json;
  const auto result = invoke(config);
  CHECK(result.status == 0);
  const auto doc = nlohmann::json::parse(result.out);
  CHECK(doc.contains("params"));
  CHECK(doc.contains("results"));
  CHECK(doc.contains("failures"));
  CHECK(doc["version"] == kVersion);
  CHECK(doc["params"]["n"] == 2);
  CHECK(doc["results"][0]["energy"] == "-1/2");
  CHECK(doc["results"][0]["energy_float"] == -0.5);
  CHECK(doc["results"][1]["degeneracy"] == "4");
}

TEST_CASE("invalid configuration exits with status 2") {
  RunConfig config;
  config.command = Command::spectrum;
  config.n = 1;
  const auto result = invoke(config);
  CHECK(result.status == 2);
  CHECK(result.diag.find("n must be >= 2") != std::string::npos);

  RunConfig bad_suite;
  bad_suite.command = Command::verify;
  bad_suite.suite = "no-such-suite";
  CHECK(invoke(bad_suite).status == 2);
}

TEST_CASE("verify suites run through the cli layer") {
  RunConfig config;
  config.command = Command::verify;
  config.suite = "dimension-equality";
  config.n = 3;
  config.k_max = 20;
  config.format = OutputFormat::csv;
  const auto result = invoke(config);
  CHECK(result.status == 0);
  // header plus one row per shell
  CHECK(result.out.find("suite,label,lhs,rhs,pass") == 0);
  int rows = 0;
  for (char c : result.out)
    if (c == '\n') ++rows;
  CHECK(rows == 22);

  RunConfig hydrogen;
  hydrogen.command = Command::verify;
  hydrogen.suite = "hydrogen-regression";
  hydrogen.format = OutputFormat::json;
  const auto hydrogen_result = invoke(hydrogen);
  CHECK(hydrogen_result.status == 0);
  const auto doc = nlohmann::json::parse(hydrogen_result.out);
  CHECK(doc["failures"].empty());
  CHECK(doc["results"][0]["pass"] == true);
}

TEST_CASE("ktypes table") {
  RunConfig config;
  config.command = Command::ktypes;
  config.n = 3;
  config.sigma_bar = 1;
  config.levels = 3;
  config.format = OutputFormat::csv;
  const auto result = invoke(config);
  CHECK(result.status == 0);
  CHECK(result.out.find("I,left_ktype,left_dim,right_ktype,right_dim,product,"
                        "degeneracy,match") == 0);
  CHECK(result.out.find("2,[-1/2 -1/2 -5/2],6,[7/2 1/2 1/2],10,60,60,true") !=
        std::string::npos);
}

TEST_CASE("profile sampling") {
  RunConfig config;
  config.command = Command::radial;
  config.n = 2;
  config.sigma_bar = 0;
  config.k = 1;
  config.l = 0;
  config.sample_points = 5;
  config.format = OutputFormat::csv;
  const auto result = invoke(config);
  CHECK(result.status == 0);
  CHECK(result.out.substr(0, 10) == "rho,value\n");
  int rows = 0;
  for (char c : result.out)
    if (c == '\n') ++rows;
  CHECK(rows == 6);

  config.command = Command::oscillator;
  const auto twisted = invoke(config);
  CHECK(twisted.status == 0);
  CHECK(twisted.out.substr(0, 8) == "r,value\n");
}

TEST_CASE("micz and geometry check commands") {
  RunConfig micz;
  micz.command = Command::micz_check;
  micz.i_max = 3;
  CHECK(invoke(micz).status == 0);

  RunConfig geometry;
  geometry.command = Command::geometry_check;
  geometry.n = 3;
  geometry.samples = 200;
  CHECK(invoke(geometry).status == 0);

  // A hostile tolerance flips the exit status to 1 and reports failures.
  geometry.tol.metric_residual = 1e-30;
  const auto failing = invoke(geometry);
  CHECK(failing.status == 1);
}

TEST_CASE("file output matches stream output") {
  const std::string path = "cli_test_output.csv";
  RunConfig config;
  config.command = Command::spectrum;
  config.levels = 3;
  config.format = OutputFormat::csv;
  const auto streamed = invoke(config);
  config.output_path = path;
  const auto filed = invoke(config);
  CHECK(filed.status == 0);
  CHECK(filed.out.empty());
  std::ifstream file(path, std::ios::binary);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(contents.str() == streamed.out);
  std::remove(path.c_str());
}
