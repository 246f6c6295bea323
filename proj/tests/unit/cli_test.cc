// Copyright 2026 The Hyperjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace hyperjac::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Hyperjac(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperjac");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

std::string CurvePath(const std::string& name) {
  return test::DataPath(name + ".curve");
}

TEST(CliTest, GeneratorsTextReport) {
  const Result r =
      Hyperjac({"generators", CurvePath("p7_two_primes"), "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gamma1 = (u:"), std::string::npos);
  EXPECT_NE(r.out.find("m = 72"), std::string::npos);
}

TEST(CliTest, TrivialTorsionMessage) {
  const Result r = Hyperjac({"generators", CurvePath("p5_trivial_m")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("no prime of N divides p - 1"), std::string::npos);
}

TEST(CliTest, JsonRoundTripVerifies) {
  for (const std::string& name : test::TinyCurves()) {
    const Result gen =
        Hyperjac({"generators", CurvePath(name), "--seed", "5", "--json"});
    ASSERT_EQ(gen.code, kExitOk) << name << gen.err;
    const Json report = Json::parse(gen.out);
    for (const char* key :
         {"curve", "m", "generators", "certificate", "seed", "timings"}) {
      EXPECT_TRUE(report.contains(key)) << key;
    }
    EXPECT_EQ(report["generators"].size(), 4u);
    const std::string path = TempFile(name + ".json", gen.out);
    const Result ver = Hyperjac({"verify", CurvePath(name), path});
    EXPECT_EQ(ver.code, kExitOk) << name << ver.err;
    EXPECT_NE(ver.out.find("oracle: span"), std::string::npos);
  }
}

TEST(CliTest, SexticInputUsesQuinticModel) {
  const Result gen =
      Hyperjac({"generators", CurvePath("p13_sextic"), "--json"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  const Json report = Json::parse(gen.out);
  EXPECT_EQ(report["curve"]["model_root"], "3");
  EXPECT_EQ(report["curve"]["model_f"].size(), 6u);
  EXPECT_EQ(report["m"], "2");
  const Result ver = Hyperjac(
      {"verify", CurvePath("p13_sextic"), TempFile("sextic.json", gen.out)});
  EXPECT_EQ(ver.code, kExitOk) << ver.err;
}

TEST(CliTest, JsonIsDeterministic) {
  const auto a =
      Hyperjac({"generators", CurvePath("p13_two_primes"), "--json"});
  const auto b =
      Hyperjac({"generators", CurvePath("p13_two_primes"), "--json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("wall_seconds"), std::string::npos);
  const auto c = Hyperjac(
      {"generators", CurvePath("p13_two_primes"), "--json", "--wall-clock"});
  EXPECT_NE(c.out.find("wall_seconds"), std::string::npos);
}

class TamperTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const Result gen = Hyperjac(
        {"generators", CurvePath("p19_rank4"), "--seed", "1", "--json"});
    ASSERT_EQ(gen.code, kExitOk);
    report_ = Json::parse(gen.out);
  }

  Result Verify(const Json& report) {
    return Hyperjac({"verify", CurvePath("p19_rank4"),
                     TempFile("tampered.json", report.dump(2))});
  }

  Json report_;
};

TEST_F(TamperTest, ReplacedGeneratorIsRejected) {
  Json bad = report_;
  bad["generators"][2] = bad["generators"][3];
  const Result r = Verify(bad);
  EXPECT_EQ(r.code, kExitNotCertified) << r.out;
  EXPECT_NE(r.err.find("not certified"), std::string::npos);
}

TEST_F(TamperTest, ReplacedGeneratorWithoutProbesIsRejected) {
  Json bad = report_;
  bad.erase("certificate");
  bad["generators"][1] = bad["generators"][2];
  EXPECT_EQ(Verify(bad).code, kExitNotCertified);
  bad = report_;
  bad.erase("certificate");
  EXPECT_EQ(Verify(bad).code, kExitOk);
}

TEST_F(TamperTest, IdentityGeneratorsAreRejected) {
  Json bad = report_;
  for (auto& g : bad["generators"]) {
    g["u"] = Json::array({"1"});
    g["v"] = Json::array({"0"});
  }
  EXPECT_EQ(Verify(bad).code, kExitNotCertified);
}

TEST_F(TamperTest, MalformedJsonIsAnError) {
  const Result r = Hyperjac({"verify", CurvePath("p19_rank4"),
                             TempFile("broken.json", "{\"generators\": [")});
  EXPECT_EQ(r.code, kExitError);
  Json bad = report_;
  bad["generators"][0]["u"] = Json::array({"1", "1"});  // (x + 1, v = ?)
  bad["generators"][0]["v"] = Json::array({"5"});
  EXPECT_EQ(Verify(bad).code, kExitError);
}

TEST(CliTest, BadCurveFiles) {
  const Result wrong_n = Hyperjac(
      {"generators", TempFile("wrong_n.curve", "p=7\nf=0,1,2,2,1,1\nN=70\n")});
  EXPECT_EQ(wrong_n.code, kExitError);
  const Result syntax = Hyperjac(
      {"generators", TempFile("syntax.curve", "p=7\nf=0,1,2,,1,1\nN=72\n")});
  EXPECT_EQ(syntax.code, kExitError);
  EXPECT_NE(syntax.err.find("line 2"), std::string::npos);
  EXPECT_EQ(Hyperjac({"generators", "/nonexistent.curve"}).code, kExitError);
  EXPECT_EQ(Hyperjac({"generators"}).code, kExitError);
  EXPECT_EQ(Hyperjac({"bogus"}).code, kExitError);
  EXPECT_EQ(Hyperjac({"--help"}).code, kExitOk);
}

TEST(CliTest, PairCommand) {
  // p = 7, N = 72, lambda = 3.
  const Result r = Hyperjac({"pair", CurvePath("p7_two_primes"), "--g",
                             "u=0,1;v=0", "--h", "u=0,1;v=0", "--lambda", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("tau = ", 0), 0u);
  const Result z =
      Hyperjac({"pair", CurvePath("p7_two_primes"), "--g", "u=0,1;v=0", "--h",
                "u=0,1;v=0", "--lambda", "2", "--zeta", "6"});
  ASSERT_EQ(z.code, kExitOk) << z.err;
  EXPECT_NE(z.out.find("log_zeta(tau) = "), std::string::npos);
  EXPECT_EQ(Hyperjac({"pair", CurvePath("p7_two_primes"), "--g", "u=0,1;v=0",
                      "--h", "u=0,1;v=0", "--lambda", "2", "--zeta", "2"})
                .code,
            kExitError);
  EXPECT_EQ(Hyperjac({"pair", CurvePath("p7_two_primes"), "--g", "u=0,1;v=0",
                      "--h", "u=0,1;v=0", "--lambda", "5"})
                .code,
            kExitError);
}

TEST(CliTest, EnumerateWritesCurveFile) {
  const Result r = Hyperjac({"enumerate", "--p", "7", "--f", "0,1,2,2,1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("N = 72"), std::string::npos);
  EXPECT_NE(r.out.find("invariants 1,2,2,18"), std::string::npos);
  EXPECT_EQ(Hyperjac({"enumerate", "--p", "67", "--f", "0,1,2,2,1,1"}).code,
            kExitError);
}

TEST(CliTest, PrimeOutsideTorsionIsAnError) {
  EXPECT_EQ(
      Hyperjac({"generators", CurvePath("p7_two_primes"), "--primes", "5"})
          .code,
      kExitError);
}

}  // namespace
}  // namespace hyperjac::cli
