// Copyright 2026 The persum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "test_support.hpp"

namespace persum::cli {
namespace {

using persum::testing::CommandResult;

CommandResult cli(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string("env -u PERIODIC_SUM_TOL '") + PERSUM_CLI_PATH + "' " + args;
  cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
  return persum::testing::run_command(cmd);
}

nlohmann::json json_of(const std::string& args) {
  const auto r = cli(args + " --format json");
  return nlohmann::json::parse(r.out);
}

TEST(Cli, SumAltHarmonicAtThree) {
  const auto r = cli("sum --family alt-harmonic --n 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_NEAR(doc["rows"][0]["brute_re"].get<double>(), -0.5, 1e-15);
  EXPECT_NEAR(doc["rows"][0]["closed_re"].get<double>(), -0.5, 1e-15);
  EXPECT_EQ(doc["command"], "sum");
}

TEST(Cli, SumWeightExpressionOverRecip4) {
  const auto doc = json_of("sum --weight 'sin(k*pi/2)' --family recip4 --n 0..10");
  ASSERT_EQ(doc["rows"].size(), 11u);
  for (const auto& row : doc["rows"]) EXPECT_LE(row["abs_err"].get<double>(), 1e-10);
  EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(Cli, SumLog3AtZeroIsDomainError) {
  const auto r = cli("sum --family log3 --n 0", true);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("n >= 1"), std::string::npos) << r.out;
}

TEST(Cli, SumUsageErrors) {
  EXPECT_EQ(cli("sum --family nope").exit_code, 2);
  EXPECT_EQ(cli("sum").exit_code, 2);
  EXPECT_EQ(cli("sum --family recip4 --n 5..2").exit_code, 2);
  EXPECT_EQ(cli("sum --family recip4 --n -1").exit_code, 2);
  EXPECT_EQ(cli("sum --f 'k' ").exit_code, 2);
  EXPECT_EQ(cli("sum --f '1/(k+1)' --weight 'k'").exit_code, 2);
  const auto lex = cli("sum --f '2..5' --weight '(-1)^k'", true);
  EXPECT_EQ(lex.exit_code, 2);
  EXPECT_NE(lex.out.find("offset 2"), std::string::npos) << lex.out;
}

TEST(Cli, SumMismatchIsData) {
  // A catalog summand under a foreign weight goes through the anti-difference.
  const auto doc = json_of("sum --family log4 --weight '(-1)^k' --n 0..20");
  EXPECT_EQ(doc["params"]["closed_route"], "anti-difference");
  EXPECT_TRUE(doc["passed"].get<bool>());
  // With a custom f there is no closed column and the exit code stays 0.
  const auto r = cli("sum --f '1/(k+1)' --weight '(-1)^k' --n 4 --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["rows"][0]["closed_re"].is_null());
}

TEST(Cli, CsvHeader) {
  const auto r = cli("sum --family recip4 --n 0..3 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,brute_re,brute_im,closed_re,closed_im,abs_err");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, VerifyDefaultPasses) {
  const auto r = cli("verify --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["rows"].size(), 12u);
}

TEST(Cli, VerifyGaussQmax12) {
  const auto doc = json_of("verify --suite gauss --qmax 12");
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_LE(doc["rows"][0]["max_err"].get<double>(), 1e-10);
  EXPECT_LE(doc["max_abs_err"].get<double>(), 1e-10);
}

TEST(Cli, VerifyInjectedFaultExitsOne) {
  const auto r = cli("verify --inject-fault", true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("closed-forms failed"), std::string::npos);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(cli("verify --suite nope").exit_code, 2);
  EXPECT_EQ(cli("verify --qmax 1").exit_code, 2);
  EXPECT_EQ(cli("verify --qmax abc").exit_code, 2);
}

TEST(Cli, VerifyIsByteIdentical) {
  const auto a = cli("verify --format json");
  const auto b = cli("verify --format json --serial");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(cli("verify").out, cli("verify").out);
}

TEST(Cli, Gauss) {
  const auto half = json_of("gauss 1 2");
  EXPECT_NEAR(half["rows"][0]["formula"].get<double>(), 0.6137056388801093812, 1e-13);
  const auto third = json_of("gauss 1 3");
  EXPECT_NEAR(third["rows"][0]["formula"].get<double>(), 0.4451818848807265376, 1e-10);
  EXPECT_LE(std::abs(third["rows"][0]["diff"].get<double>()), 1e-10);
  EXPECT_EQ(cli("gauss 5 5").exit_code, 2);
  EXPECT_EQ(cli("gauss 0 5").exit_code, 2);
  EXPECT_EQ(cli("gauss 1").exit_code, 2);
}

TEST(Cli, GeneratingFunctions) {
  const auto prog = json_of("gf --family recip4 --q 4 --p 1 --N 32");
  EXPECT_EQ(prog["rows"].size(), 32u);
  EXPECT_LE(prog["max_abs_err"].get<double>(), 1e-10);
  const auto alt = json_of("gf --f '1/(k+1)' --weight '(-1)^k' --N 16");
  EXPECT_EQ(alt["rows"].size(), 16u);
  EXPECT_TRUE(alt["passed"].get<bool>());
  EXPECT_EQ(cli("gf --N 0").exit_code, 2);
  EXPECT_EQ(cli("gf --family recip4 --N 4097").exit_code, 2);
  EXPECT_EQ(cli("gf --family recip4 --q 4 --p 4").exit_code, 2);
}

TEST(Cli, Binomial) {
  const auto a = json_of("binomial --m 1 --q 3 --p 1 --h recip");
  EXPECT_NEAR(a["rows"][0]["closed"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(a["rows"][0]["brute"].get<double>(), 0.5, 1e-15);
  const auto b = json_of("binomial --m 30 --q 8 --p 7 --h one");
  EXPECT_LE(b["rows"][0]["rel_err"].get<double>(), 1e-9);
  const auto c = json_of("binomial --m 0 --q 2 --p 1 --h one");
  EXPECT_EQ(c["rows"][0]["closed"].get<double>(), 0.0);
  EXPECT_EQ(cli("binomial --m 3 --q 3 --p 3 --h one").exit_code, 2);
  EXPECT_EQ(cli("binomial --m 3 --q 3 --p 1 --h two").exit_code, 2);
}

TEST(Cli, Catalog) {
  const auto doc = json_of("catalog");
  ASSERT_EQ(doc["rows"].size(), 7u);
  EXPECT_EQ(doc["rows"][0]["id"], "log3");
  EXPECT_EQ(doc["rows"][6]["id"], "binomial");
}

TEST(Cli, ToleranceFlagBeatsEnvironment) {
  const std::string bin = std::string("'") + PERSUM_CLI_PATH + "'";
  auto run = [&](const std::string& env, const std::string& args) {
    return persum::testing::run_command(env + " " + bin + " " + args + " >/dev/null 2>&1");
  };
  EXPECT_EQ(run("PERIODIC_SUM_TOL=1e-30", "gauss 1 3").exit_code, 1);
  EXPECT_EQ(run("PERIODIC_SUM_TOL=1e-30", "--tol 1e-9 gauss 1 3").exit_code, 0);
  EXPECT_EQ(run("PERIODIC_SUM_TOL=abc", "gauss 1 3").exit_code, 2);
  EXPECT_EQ(run("PERIODIC_SUM_TOL=1e-9", "--tol -1 gauss 1 3").exit_code, 2);
  EXPECT_EQ(run("PERIODIC_SUM_TOL=1e-30", "verify --suite gauss").exit_code, 1);
}

TEST(Cli, OutFileFormatFromExtension) {
  const std::string path = ::testing::TempDir() + "persum_cli_out.json";
  std::remove(path.c_str());
  const auto r = cli("binomial --m 4 --q 2 --p 0 --h one --out '" + path + "'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  const auto doc = nlohmann::json::parse(body.str());
  EXPECT_EQ(doc["rows"][0]["brute"].get<double>(), 8.0);
  std::remove(path.c_str());
}

TEST(Cli, HelpAndUnknownFlags) {
  EXPECT_EQ(cli("--help").exit_code, 0);
  EXPECT_NE(cli("--help").out.find("sin(k*pi/2)"), std::string::npos);
  EXPECT_EQ(cli("").exit_code, 2);
  EXPECT_EQ(cli("sum --bogus").exit_code, 2);
  EXPECT_EQ(cli("--format yaml catalog").exit_code, 2);
}

TEST(Cli, InProcessRun) {
  const char* argv[] = {"persum", "binomial", "--m", "2", "--q", "2", "--p", "1"};
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(8, argv, out, err), kExitPass);
  EXPECT_NE(out.str().find("passed=true"), std::string::npos);
}

}  // namespace
}  // namespace persum::cli
