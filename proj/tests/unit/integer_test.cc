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

#include "hyperjac/integer.h"

#include <set>

#include "gtest/gtest.h"
#include "hyperjac/error.h"

namespace hyperjac {
namespace {

// Plain trial division, for cross-checking Factor.
Factorization TrialDivision(Integer n) {
  Factorization out;
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

TEST(IntegerTest, FactorSmallNumbersMatchesTrialDivision) {
  for (long n = 2; n < 3000; ++n) {
    EXPECT_EQ(Factor(Integer(n)), TrialDivision(Integer(n))) << n;
  }
}

TEST(IntegerTest, FactorLargeSemiprime) {
  const Integer a("1000000007"), b("998244353");
  const Factorization f = Factor(a * b);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], (PrimePower{b, 1}));
  EXPECT_EQ(f[1], (PrimePower{a, 1}));
}

TEST(IntegerTest, FactorMixedSizes) {
  const Integer big("18446744073709551557");  // largest prime below 2^64
  const Integer n = IntPow(Integer(2), 5) * IntPow(Integer(3), 2) *
                    Integer("1048583") * big * big;
  const Factorization f = Factor(n);
  EXPECT_EQ(Multiply(f), n);
  for (const auto& [q, e] : f) EXPECT_TRUE(IsProbablePrime(q));
  EXPECT_EQ(f.back(), (PrimePower{big, 2}));
}

TEST(IntegerTest, FactorOfOneIsEmpty) {
  EXPECT_TRUE(Factor(Integer(1)).empty());
}

TEST(IntegerTest, Valuation) {
  EXPECT_EQ(Valuation(Integer(96), Integer(2)), 5u);
  EXPECT_EQ(Valuation(Integer(96), Integer(3)), 1u);
  EXPECT_EQ(Valuation(Integer(96), Integer(5)), 0u);
}

TEST(IntegerTest, ParseAndPrint) {
  EXPECT_EQ(ParseInteger("123456789012345678901234567890"),
            Integer("123456789012345678901234567890"));
  EXPECT_EQ(ParseInteger("-17"), Integer(-17));
  EXPECT_EQ(ToString(Integer(-17)), "-17");
  EXPECT_THROW(ParseInteger(""), ParseError);
  EXPECT_THROW(ParseInteger("12a"), ParseError);
  EXPECT_THROW(ParseInteger("-"), ParseError);
}

TEST(IntegerTest, RngIsDeterministicAndInRange) {
  Rng a(5), b(5);
  const Integer bound("340282366920938463463374607431768211507");
  for (int i = 0; i < 200; ++i) {
    const Integer x = a.Below(bound);
    EXPECT_EQ(x, b.Below(bound));
    EXPECT_GE(x, 0);
    EXPECT_LT(x, bound);
  }
}

TEST(IntegerTest, RngCoversSmallRange) {
  Rng rng(11);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 500; ++i) seen.insert(rng.Below(std::uint64_t{7}));
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(*seen.rbegin(), 6u);
}

}  // namespace
}  // namespace hyperjac
