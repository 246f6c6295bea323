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

#include "hyperjac/finite_field.h"

#include "hyperjac/error.h"

namespace hyperjac {

std::shared_ptr<const PrimeField> PrimeField::Create(const Integer& p) {
  if (p <= 2 || !IsProbablePrime(p)) {
    throw UsageError("field modulus must be an odd prime, got " + ToString(p));
  }
  std::shared_ptr<PrimeField> field(new PrimeField(p));
  field->p_minus_one_ = p - 1;
  field->two_adicity_ = Valuation(field->p_minus_one_, 2);
  field->odd_part_ = field->p_minus_one_ >> field->two_adicity_;
  // Smallest quadratic non-residue, used by Tonelli-Shanks.
  for (Integer z = 2;; ++z) {
    if (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) == -1) {
      field->non_residue_ = z;
      break;
    }
  }
  return field;
}

Fp PrimeField::Element(const Integer& value) const {
  Integer r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), p_.get_mpz_t());
  return Fp(shared_from_this(), std::move(r));
}

Fp PrimeField::Element(long value) const { return Element(Integer(value)); }

Fp PrimeField::Zero() const { return Fp(shared_from_this(), 0); }

Fp PrimeField::One() const { return Fp(shared_from_this(), 1); }

Fp PrimeField::Random(Rng& rng) const {
  return Fp(shared_from_this(), rng.Below(p_));
}

Fp PrimeField::RandomNonzero(Rng& rng) const {
  return Fp(shared_from_this(), rng.Below(p_minus_one_) + 1);
}

int PrimeField::Legendre(const Fp& a) const {
  return mpz_legendre(a.value().get_mpz_t(), p_.get_mpz_t());
}

std::optional<Fp> PrimeField::Sqrt(const Fp& a) const {
  if (a.IsZero()) return a;
  if (Legendre(a) != 1) return std::nullopt;
  auto self = shared_from_this();
  Integer m = two_adicity_;
  Fp c = Fp(self, non_residue_).Pow(odd_part_);
  Fp t = a.Pow(odd_part_);
  Fp r = a.Pow((odd_part_ + 1) / 2);
  while (!t.IsOne()) {
    // Least i with t^(2^i) = 1.
    unsigned i = 0;
    Fp t2 = t;
    while (!t2.IsOne()) {
      t2 = t2 * t2;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + 1 + i < m.get_ui(); ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

Fp PrimeField::PrimitiveRootOfUnity(const Integer& lambda, Rng& rng) const {
  if (lambda < 1) throw UsageError("root of unity order must be positive");
  return PrimitiveRootOfUnity(lambda, Factor(lambda), rng);
}

Fp PrimeField::PrimitiveRootOfUnity(const Integer& lambda,
                                    const Factorization& lambda_factors,
                                    Rng& rng) const {
  if (lambda < 1 || p_minus_one_ % lambda != 0) {
    throw UsageError("lambda = " + ToString(lambda) + " does not divide p - 1");
  }
  if (lambda == 1) return One();
  const Integer cofactor = p_minus_one_ / lambda;
  while (true) {
    Fp zeta = RandomNonzero(rng).Pow(cofactor);
    bool primitive = true;
    for (const auto& [q, e] : lambda_factors) {
      if (zeta.Pow(lambda / q).IsOne()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return zeta;
  }
}

Integer PrimeField::ElementOrder(const Fp& a, const Integer& multiple) const {
  if (multiple < 1) throw UsageError("order multiple must be positive");
  return ElementOrder(a, multiple, Factor(multiple));
}

Integer PrimeField::ElementOrder(const Fp& a, const Integer& multiple,
                                 const Factorization& multiple_factors) const {
  if (!a.Pow(multiple).IsOne()) {
    throw UsageError("element is not killed by the supplied multiple");
  }
  Integer order = multiple;
  for (const auto& [q, e] : multiple_factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (!a.Pow(order / q).IsOne()) break;
      order /= q;
    }
  }
  return order;
}

Fp::Fp(FieldRef field, Integer value)
    : field_(std::move(field)), value_(std::move(value)) {
  if (value_ < 0 || value_ >= field_->modulus()) {
    mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(),
            field_->modulus().get_mpz_t());
  }
}

void Fp::CheckSameField(const Fp& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_)) {
    throw UsageError("field elements over different moduli");
  }
}

Fp Fp::operator+(const Fp& other) const {
  CheckSameField(other);
  Integer r = value_ + other.value_;
  if (r >= modulus()) r -= modulus();
  return Fp(field_, std::move(r));
}

Fp Fp::operator-(const Fp& other) const {
  CheckSameField(other);
  Integer r = value_ - other.value_;
  if (r < 0) r += modulus();
  return Fp(field_, std::move(r));
}

Fp Fp::operator*(const Fp& other) const {
  CheckSameField(other);
  Integer r = value_ * other.value_;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus().get_mpz_t());
  return Fp(field_, std::move(r));
}

Fp Fp::operator/(const Fp& other) const { return *this * other.Inverse(); }

Fp Fp::operator-() const {
  if (IsZero()) return *this;
  return Fp(field_, modulus() - value_);
}

Fp Fp::Inverse() const {
  if (IsZero()) throw DivisionByZeroError("inverse of zero in F_p");
  Integer r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus().get_mpz_t());
  return Fp(field_, std::move(r));
}

Fp Fp::Pow(const Integer& exponent) const {
  if (exponent < 0) return Inverse().Pow(-exponent);
  Integer r;
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(),
           modulus().get_mpz_t());
  return Fp(field_, std::move(r));
}

bool Fp::operator==(const Fp& other) const {
  CheckSameField(other);
  return value_ == other.value_;
}

std::string ToString(const Fp& a) { return ToString(a.value()); }

}  // namespace hyperjac
