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

#include "hyperjac/dlp.h"

#include "gtest/gtest.h"
#include "hyperjac/error.h"

namespace hyperjac {
namespace {

TEST(DlpTest, ExhaustiveSmallOrders) {
  // p - 1 = 2^4 * 3^2 * 7
  const FieldRef f = PrimeField::Create(Integer(1009));
  Rng rng(1);
  for (long lambda : {2L, 4L, 9L, 14L, 16L, 63L, 144L, 1008L}) {
    const Integer l(lambda);
    const Fp zeta = f->PrimitiveRootOfUnity(l, rng);
    const DlogInstance base{zeta, zeta, Factor(l)};
    Fp target = f->One();
    for (long a = 0; a < lambda; ++a) {
      DlogInstance inst = base;
      inst.target = target;
      ASSERT_EQ(PohligHellman(inst), a) << lambda;
      target *= zeta;
    }
  }
}

TEST(DlpTest, RejectsTargetsOutsideSubgroup) {
  const FieldRef f = PrimeField::Create(Integer(1009));
  Rng rng(2);
  const Fp zeta = f->PrimitiveRootOfUnity(Integer(9), rng);
  const Fp outside = f->PrimitiveRootOfUnity(Integer(7), rng);
  EXPECT_THROW(PohligHellman({zeta, outside, Factor(Integer(9))}),
               NotInSubgroupError);
  EXPECT_THROW(
      PohligHellman({zeta, zeta.Pow(Integer(3)) * outside, Factor(Integer(9))}),
      NotInSubgroupError);
}

TEST(DlpTest, LargePrimeDigitsUseBsgs) {
  // p = 2 * 1000003 * k + 1 style prime with a large prime digit.
  const Integer q(1000003);
  Integer p = 2 * q + 1;
  while (!IsProbablePrime(p)) p += 2 * q;
  const FieldRef f = PrimeField::Create(p);
  Rng rng(3);
  const Fp zeta = f->PrimitiveRootOfUnity(q, rng);
  for (int i = 0; i < 20; ++i) {
    const Integer a = rng.Below(q);
    EXPECT_EQ(PrimeOrderLog(zeta, zeta.Pow(a), q), a);
    EXPECT_EQ(PohligHellman({zeta, zeta.Pow(a), {{q, 1}}}), a);
  }
}

TEST(DlpTest, RandomCompositeOrders) {
  Rng rng(4);
  const Integer p("18446744073709551557");  // largest prime below 2^64
  const FieldRef f = PrimeField::Create(p);
  const Integer lambda(4 * 11 * 137 * 547);
  const Factorization factors = Factor(lambda);
  for (int i = 0; i < 30; ++i) {
    const Fp zeta = f->PrimitiveRootOfUnity(lambda, factors, rng);
    const Integer a = rng.Below(lambda);
    EXPECT_EQ(PohligHellman({zeta, zeta.Pow(a), factors}), a);
  }
}

}  // namespace
}  // namespace hyperjac
