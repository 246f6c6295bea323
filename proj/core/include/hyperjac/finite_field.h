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

#include <memory>
#include <optional>

#include "hyperjac/integer.h"

namespace hyperjac {

class Fp;

// The prime field F_p. Shared by every element, polynomial and curve built
// over it; create through PrimeField::Create.
class PrimeField : public std::enable_shared_from_this<PrimeField> {
 public:
  // Throws UsageError unless p is an odd prime.
  static std::shared_ptr<const PrimeField> Create(const Integer& p);

  const Integer& modulus() const { return p_; }

  // Canonical residue of any integer, negative values included.
  Fp Element(const Integer& value) const;
  Fp Element(long value) const;
  Fp Zero() const;
  Fp One() const;
  Fp Random(Rng& rng) const;
  Fp RandomNonzero(Rng& rng) const;

  // Legendre symbol: 1, -1, or 0 for zero.
  int Legendre(const Fp& a) const;

  // Tonelli-Shanks. nullopt for non-squares.
  std::optional<Fp> Sqrt(const Fp& a) const;

  // Element of multiplicative order exactly lambda. Throws UsageError when
  // lambda does not divide p - 1.
  Fp PrimitiveRootOfUnity(const Integer& lambda, Rng& rng) const;
  Fp PrimitiveRootOfUnity(const Integer& lambda,
                          const Factorization& lambda_factors, Rng& rng) const;

  // Exact multiplicative order of a, given a^multiple = 1.
  Integer ElementOrder(const Fp& a, const Integer& multiple) const;
  Integer ElementOrder(const Fp& a, const Integer& multiple,
                       const Factorization& multiple_factors) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  explicit PrimeField(const Integer& p) : p_(p) {}

  Integer p_;
  Integer p_minus_one_;
  // p - 1 = 2^two_adicity_ * odd_part_, and a fixed non-residue.
  unsigned two_adicity_ = 0;
  Integer odd_part_;
  Integer non_residue_;
};

using FieldRef = std::shared_ptr<const PrimeField>;

// An element of F_p, always held as its canonical residue in [0, p).
class Fp {
 public:
  Fp(FieldRef field, Integer value);

  const Integer& value() const { return value_; }
  const FieldRef& field() const { return field_; }
  const Integer& modulus() const { return field_->modulus(); }

  bool IsZero() const { return value_ == 0; }
  bool IsOne() const { return value_ == 1; }

  Fp operator+(const Fp& other) const;
  Fp operator-(const Fp& other) const;
  Fp operator*(const Fp& other) const;
  Fp operator/(const Fp& other) const;
  Fp operator-() const;
  Fp& operator+=(const Fp& other) { return *this = *this + other; }
  Fp& operator-=(const Fp& other) { return *this = *this - other; }
  Fp& operator*=(const Fp& other) { return *this = *this * other; }

  // Throws DivisionByZeroError for zero.
  Fp Inverse() const;

  // Square and multiply; negative exponents invert first.
  Fp Pow(const Integer& exponent) const;

  bool operator==(const Fp& other) const;
  bool operator!=(const Fp& other) const { return !(*this == other); }

 private:
  void CheckSameField(const Fp& other) const;

  FieldRef field_;
  Integer value_;
};

std::string ToString(const Fp& a);

}  // namespace hyperjac
