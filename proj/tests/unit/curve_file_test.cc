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

#include "hyperjac/curve_file.h"

#include <sstream>

#include "gtest/gtest.h"
#include "hyperjac/error.h"
#include "test_util.h"

namespace hyperjac {
namespace {

CurveDescription Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseCurveDescription(in);
}

TEST(CurveFileTest, ParsesAllFields) {
  const CurveDescription d = Parse(
      "# comment\n\np = 7\nf = 0,1,2,2,1,1  # trailing\nN = 72\n"
      "N_factors = 2^3,3^2\n");
  EXPECT_EQ(d.p, 7);
  ASSERT_EQ(d.f.size(), 6u);
  EXPECT_EQ(d.f[1], 1);
  EXPECT_EQ(d.order, 72);
  ASSERT_TRUE(d.order_factors.has_value());
  EXPECT_EQ(FormatFactorization(*d.order_factors), "2^3,3^2");
}

TEST(CurveFileTest, FactorsAreOptional) {
  const CurveDescription d = Parse("p=7\nf=0,1,2,2,1,1\nN=72\n");
  EXPECT_FALSE(d.order_factors.has_value());
  EXPECT_EQ(MakeGroupContext(d).order_factors(),
            (Factorization{{Integer(2), 3}, {Integer(3), 2}}));
}

TEST(CurveFileTest, ErrorsCarryLineNumbers) {
  try {
    Parse("p = 7\nf = 0,1,x,2,1,1\nN = 72\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(Parse("p = 7\nf = 0,1,2,2,1,1\n"), ParseError);
  EXPECT_THROW(Parse("p = 7\np = 7\nf = 0,1,2,2,1,1\nN = 72\n"), ParseError);
  EXPECT_THROW(Parse("q = 7\nf = 0,1,2,2,1,1\nN = 72\n"), ParseError);
  EXPECT_THROW(Parse("p 7\n"), ParseError);
}

TEST(CurveFileTest, RoundTrip) {
  const CurveDescription d = ReadCurveFile(test::DataPath("p2e64_split.curve"));
  const CurveDescription e = Parse(FormatCurveDescription(d));
  EXPECT_EQ(e.p, d.p);
  EXPECT_EQ(e.f, d.f);
  EXPECT_EQ(e.order, d.order);
  EXPECT_EQ(e.order_factors, d.order_factors);
}

TEST(CurveFileTest, MissingFile) {
  EXPECT_THROW(ReadCurveFile(test::DataPath("no_such.curve")), Error);
}

TEST(CurveFileTest, FactorizationSyntax) {
  EXPECT_EQ(ParseFactorization("2^3,5"),
            (Factorization{{Integer(2), 3}, {Integer(5), 1}}));
  EXPECT_THROW(ParseFactorization("2^"), ParseError);
  EXPECT_THROW(ParseFactorization("a^2"), ParseError);
  EXPECT_EQ(ParseIntegerList("3, 5,7"),
            (std::vector<Integer>{Integer(3), Integer(5), Integer(7)}));
}

TEST(CurveFileTest, DivisorLiteral) {
  const test::Fixture fx = test::LoadFixture("p7_two_primes");
  const Curve& c = fx.ctx.curve();
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Divisor d = c.RandomElement(rng);
    EXPECT_EQ(ParseDivisorLiteral(c, FormatDivisorLiteral(d)), d);
  }
  EXPECT_TRUE(ParseDivisorLiteral(c, "u=1;v=0").IsIdentity());
  EXPECT_THROW(ParseDivisorLiteral(c, "u=1,2;v"), ParseError);
  EXPECT_THROW(ParseDivisorLiteral(c, "u=0,1;v=1"), UsageError);
}

}  // namespace
}  // namespace hyperjac
