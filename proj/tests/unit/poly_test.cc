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

#include "hyperjac/poly.h"

#include "gtest/gtest.h"
#include "hyperjac/error.h"

namespace hyperjac {
namespace {

Poly RandomPoly(const FieldRef& f, int degree, Rng& rng) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.push_back(f->Random(rng).value());
  if (degree >= 0) c.back() = f->RandomNonzero(rng).value();
  return Poly(f, c);
}

// Determinant of the Sylvester matrix by Gaussian elimination over F_p.
Fp SylvesterResultant(const Poly& a, const Poly& b) {
  const FieldRef& f = a.field();
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Fp>> mat(size, std::vector<Fp>(size, f->Zero()));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[r][r + i] = a.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[n + r][r + i] = b.coeff(n - i);
  }
  Fp det = f->One();
  for (int c = 0; c < size; ++c) {
    int pivot = c;
    while (pivot < size && mat[pivot][c].IsZero()) ++pivot;
    if (pivot == size) return f->Zero();
    if (pivot != c) {
      std::swap(mat[pivot], mat[c]);
      det = -det;
    }
    det *= mat[c][c];
    const Fp inv = mat[c][c].Inverse();
    for (int r = c + 1; r < size; ++r) {
      const Fp factor = mat[r][c] * inv;
      for (int k = c; k < size; ++k) mat[r][k] -= factor * mat[c][k];
    }
  }
  return det;
}

TEST(PolyTest, ConstructionStripsZeros) {
  const FieldRef f = PrimeField::Create(Integer(7));
  EXPECT_EQ(Poly(f, {1, 2, 0, 7}).degree(), 1);
  EXPECT_TRUE(Poly(f, {0, 7, 14}).IsZero());
  EXPECT_EQ(Poly(f, {0, 7, 14}).degree(), -1);
  EXPECT_EQ(Poly(f, {-1}).coeff(0).value(), 6);
  EXPECT_EQ(ToString(Poly(f, {1, 0, 3})), "1,0,3");
  EXPECT_EQ(ToString(Poly(f)), "0");
}

TEST(PolyTest, ArithmeticSmallExample) {
  const FieldRef f = PrimeField::Create(Integer(5));
  const Poly a(f, {1, 1});     // x + 1
  const Poly b(f, {4, 0, 1});  // x^2 - 1
  EXPECT_EQ(a * a, Poly(f, {1, 2, 1}));
  EXPECT_EQ(b / a, Poly(f, {4, 1}));
  EXPECT_TRUE((b % a).IsZero());
  EXPECT_EQ(b.Derivative(), Poly(f, {0, 2}));
  EXPECT_EQ(b.Evaluate(f->Element(2)), f->Element(3));
  EXPECT_EQ(Poly(f, {2, 4}).Monic(), Poly(f, {3, 1}));
}

TEST(PolyTest, DivModIdentity) {
  const FieldRef f = PrimeField::Create(Integer("18446744073709551557"));
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Poly a = RandomPoly(f, static_cast<int>(rng.Below(9)), rng);
    const Poly b = RandomPoly(f, static_cast<int>(rng.Below(5)), rng);
    const auto [q, r] = DivMod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(DivMod(Poly(f, {1}), Poly(f)), DivisionByZeroError);
}

TEST(PolyTest, XgcdIsBezout) {
  const FieldRef f = PrimeField::Create(Integer(101));
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Poly common = RandomPoly(f, static_cast<int>(rng.Below(3)), rng);
    const Poly a = common * RandomPoly(f, static_cast<int>(rng.Below(4)), rng);
    const Poly b = common * RandomPoly(f, static_cast<int>(rng.Below(4)), rng);
    const XgcdResult r = Xgcd(a, b);
    EXPECT_TRUE(r.gcd.IsMonic());
    EXPECT_EQ(r.s * a + r.t * b, r.gcd);
    EXPECT_TRUE((a % r.gcd).IsZero());
    EXPECT_TRUE((b % r.gcd).IsZero());
    EXPECT_TRUE((r.gcd % common.Monic()).IsZero());
  }
  EXPECT_THROW(Xgcd(Poly(f), Poly(f)), UsageError);
}

TEST(PolyTest, ResultantMatchesSylvesterDeterminant) {
  for (long p : {7L, 101L}) {
    const FieldRef f = PrimeField::Create(Integer(p));
    Rng rng(p);
    for (int i = 0; i < 300; ++i) {
      const Poly a = RandomPoly(f, 1 + static_cast<int>(rng.Below(5)), rng);
      const Poly b = RandomPoly(f, 1 + static_cast<int>(rng.Below(5)), rng);
      EXPECT_EQ(Resultant(a, b), SylvesterResultant(a, b))
          << ToString(a) << " | " << ToString(b);
    }
  }
}

TEST(PolyTest, ResultantOfSplitPolynomialIsProductOfValues) {
  const FieldRef f = PrimeField::Create(Integer(10007));
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Poly a(f, {1});
    std::vector<Fp> roots;
    for (int k = 0; k < 3; ++k) {
      roots.push_back(f->Random(rng));
      a *= Poly::Linear(roots.back());
    }
    const Poly b = RandomPoly(f, 4, rng);
    Fp expected = f->One();
    for (const Fp& r : roots) expected *= b.Evaluate(r);
    EXPECT_EQ(Resultant(a, b), expected);
  }
}

TEST(PolyTest, ResultantConventions) {
  const FieldRef f = PrimeField::Create(Integer(7));
  EXPECT_TRUE(Resultant(Poly(f, {3}), Poly(f)).IsOne());
  EXPECT_TRUE(Resultant(Poly(f), Poly(f, {3})).IsOne());
  EXPECT_TRUE(Resultant(Poly(f, {1, 1}), Poly(f)).IsZero());
  EXPECT_EQ(Resultant(Poly(f, {3}), Poly(f, {1, 1})), f->Element(3));
}

TEST(PolyTest, MulModReduces) {
  const FieldRef f = PrimeField::Create(Integer(13));
  const Poly m(f, {2, 0, 0, 1});
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Poly a = RandomPoly(f, 4, rng), b = RandomPoly(f, 4, rng);
    EXPECT_EQ(MulMod(a, b, m), (a * b) % m);
  }
}

}  // namespace
}  // namespace hyperjac
