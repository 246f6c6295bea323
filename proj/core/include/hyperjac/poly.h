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

#pragma once

#include <utility>
#include <vector>

#include "hyperjac/finite_field.h"

namespace hyperjac {

// Dense univariate polynomial over F_p, coefficients lowest degree first.
// Trailing zeros are stripped on construction, so equality is structural
// and the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(FieldRef field) : field_(std::move(field)) {}
  Poly(FieldRef field, std::vector<Integer> coeffs);
  Poly(FieldRef field, std::initializer_list<long> coeffs);

  static Poly Constant(const Fp& c);
  static Poly X(const FieldRef& field);
  // x - root
  static Poly Linear(const Fp& root);

  const FieldRef& field() const { return field_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  bool IsOne() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool IsMonic() const { return !IsZero() && coeffs_.back() == 1; }

  // Zero beyond the degree.
  Fp coeff(std::size_t i) const;
  Fp LeadingCoeff() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Fp& c) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  // Quotient and remainder of Euclidean division.
  Poly operator/(const Poly& divisor) const;
  Poly operator%(const Poly& divisor) const;

  // Divided by its leading coefficient; zero stays zero.
  Poly Monic() const;
  Poly Derivative() const;
  Fp Evaluate(const Fp& x) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void Normalize();
  void CheckSameField(const Poly& other) const;
  const Integer& p() const { return field_->modulus(); }

  FieldRef field_;
  std::vector<Integer> coeffs_;

  friend std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b);
};

// a = q*b + r with deg r < deg b. Throws DivisionByZeroError for b = 0.
std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b);

struct XgcdResult {
  Poly gcd;  // monic
  Poly s;
  Poly t;
};

// gcd = s*a + t*b. Throws UsageError when both inputs are zero.
XgcdResult Xgcd(const Poly& a, const Poly& b);

Poly Gcd(const Poly& a, const Poly& b);

// lc(a)^deg(b) * prod b(root) over the roots of a, by the Euclidean scheme.
// res(0, b) is 0 unless b is a nonzero constant, in which case it is 1;
// symmetrically for res(a, 0).
Fp Resultant(const Poly& a, const Poly& b);

Poly MulMod(const Poly& a, const Poly& b, const Poly& modulus);

std::string ToString(const Poly& a);

}  // namespace hyperjac
