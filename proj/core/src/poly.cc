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

#include <sstream>

#include "hyperjac/error.h"

namespace hyperjac {

Poly::Poly(FieldRef field, std::vector<Integer> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c < 0 || c >= p())
      mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p().get_mpz_t());
  }
  Normalize();
}

Poly::Poly(FieldRef field, std::initializer_list<long> coeffs)
    : field_(std::move(field)) {
  for (long c : coeffs) {
    Integer v = c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p().get_mpz_t());
    coeffs_.push_back(std::move(v));
  }
  Normalize();
}

Poly Poly::Constant(const Fp& c) { return Poly(c.field(), {c.value()}); }

Poly Poly::X(const FieldRef& field) {
  return Poly(field, std::vector<Integer>{0, 1});
}

Poly Poly::Linear(const Fp& root) {
  return Poly(root.field(), {(-root).value(), Integer(1)});
}

void Poly::Normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::CheckSameField(const Poly& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_)) {
    throw UsageError("polynomials over different fields");
  }
}

Fp Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? Fp(field_, coeffs_[i]) : field_->Zero();
}

Fp Poly::LeadingCoeff() const {
  return IsZero() ? field_->Zero() : Fp(field_, coeffs_.back());
}

Poly Poly::operator+(const Poly& other) const {
  CheckSameField(other);
  const auto& big = coeffs_.size() >= other.coeffs_.size() ? *this : other;
  const auto& small = coeffs_.size() >= other.coeffs_.size() ? other : *this;
  Poly r = big;
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) {
    r.coeffs_[i] += small.coeffs_[i];
    if (r.coeffs_[i] >= p()) r.coeffs_[i] -= p();
  }
  r.Normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) {
    if (c != 0) c = p() - c;
  }
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  CheckSameField(other);
  if (IsZero() || other.IsZero()) return Poly(field_);
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(),
                 other.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Fp& c) const {
  std::vector<Integer> out = coeffs_;
  for (auto& x : out) x *= c.value();
  return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> DivMod(const Poly& a, const Poly& b) {
  a.CheckSameField(b);
  if (b.IsZero()) throw DivisionByZeroError("polynomial division by zero");
  const Integer& p = a.p();
  Poly quotient(a.field_);
  if (a.degree() < b.degree()) return {quotient, a};
  std::vector<Integer> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  Integer lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), b.coeffs_.back().get_mpz_t(), p.get_mpz_t());
  std::vector<Integer> q(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    mpz_mod(rem[k].get_mpz_t(), rem[k].get_mpz_t(), p.get_mpz_t());
    if (rem[k] == 0) continue;
    Integer factor = rem[k] * lead_inv;
    mpz_mod(factor.get_mpz_t(), factor.get_mpz_t(), p.get_mpz_t());
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k - db + j].get_mpz_t(), factor.get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  rem.resize(db);
  return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(rem))};
}

Poly Poly::operator/(const Poly& divisor) const {
  return DivMod(*this, divisor).first;
}

Poly Poly::operator%(const Poly& divisor) const {
  return DivMod(*this, divisor).second;
}

Poly Poly::Monic() const {
  if (IsZero() || IsMonic()) return *this;
  return *this * LeadingCoeff().Inverse();
}

Poly Poly::Derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  }
  return Poly(field_, std::move(out));
}

Fp Poly::Evaluate(const Fp& x) const {
  Integer acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x.value() + coeffs_[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p().get_mpz_t());
  }
  return Fp(field_, std::move(acc));
}

bool Poly::operator==(const Poly& other) const {
  CheckSameField(other);
  return coeffs_ == other.coeffs_;
}

XgcdResult Xgcd(const Poly& a, const Poly& b) {
  if (a.IsZero() && b.IsZero()) throw UsageError("gcd of two zero polynomials");
  const FieldRef& field = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::Constant(field->One()), s1(field);
  Poly t0(field), t1 = Poly::Constant(field->One());
  while (!r1.IsZero()) {
    auto [q, r] = DivMod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Fp lead_inv = r0.LeadingCoeff().Inverse();
  return {r0 * lead_inv, s0 * lead_inv, t0 * lead_inv};
}

Poly Gcd(const Poly& a, const Poly& b) {
  if (a.IsZero()) return b.Monic();
  Poly r0 = a, r1 = b;
  while (!r1.IsZero()) {
    Poly r = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.Monic();
}

Fp Resultant(const Poly& a, const Poly& b) {
  const FieldRef& field = a.field();
  if (a.IsZero() || b.IsZero()) {
    const Poly& other = a.IsZero() ? b : a;
    return other.degree() == 0 ? field->One() : field->Zero();
  }
  Fp acc = field->One();
  Poly x = a, y = b;
  while (true) {
    const int m = x.degree();
    const int n = y.degree();
    if (m == 0) return acc * x.LeadingCoeff().Pow(n);
    if (n == 0) return acc * y.LeadingCoeff().Pow(m);
    // res(x, y) = (-1)^(mn) res(y, x) = (-1)^(mn) lc(y)^(m - deg r) res(y, r)
    Poly r = x % y;
    if (r.IsZero()) return field->Zero();
    if ((m & 1) && (n & 1)) acc = -acc;
    acc *= y.LeadingCoeff().Pow(m - r.degree());
    x = std::move(y);
    y = std::move(r);
  }
}

Poly MulMod(const Poly& a, const Poly& b, const Poly& modulus) {
  return (a * b) % modulus;
}

std::string ToString(const Poly& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) out << ',';
    out << a.coeffs()[i].get_str();
  }
  if (a.IsZero()) out << '0';
  return out.str();
}

}  // namespace hyperjac
