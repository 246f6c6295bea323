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

#include <optional>
#include <vector>

#include "hyperjac/poly.h"

namespace hyperjac {

class Curve;

// Reduced divisor class in Mumford form: u monic with deg u <= 2,
// deg v < deg u, and u | v^2 - f. The identity is (1, 0).
class Divisor {
 public:
  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  int degree() const { return u_.degree(); }
  bool IsIdentity() const { return u_.IsOne(); }

  bool operator==(const Divisor& other) const {
    return u_ == other.u_ && v_ == other.v_;
  }
  bool operator!=(const Divisor& other) const { return !(*this == other); }

 private:
  friend class Curve;
  Divisor(Poly u, Poly v) : u_(std::move(u)), v_(std::move(v)) {}

  Poly u_;
  Poly v_;
};

// A function a(x) + y*b(x) on the curve.
struct CurveFunction {
  Poly a;
  Poly b;
};

// One Cantor addition D1 + D2 = sum + div(h), with h recorded as a product
// of numerator functions over a product of functions of x alone.
struct CantorStep {
  Divisor sum;
  std::vector<CurveFunction> numerators;
  std::vector<Poly> denominators;
};

// How a user-supplied equation maps onto the internal monic quintic model
// y^2 = f(w). For a sextic input with rational root r:
//   x = r + scale / w,  y_internal = y * w^3 / scale.
// For a quintic input: x = w / scale, y_internal = scale^2 * y.
struct ModelTransform {
  std::vector<Integer> input_coeffs;
  std::optional<Integer> root;
  Integer scale = 1;
};

// Genus-2 curve y^2 = f(x), f a monic squarefree quintic over F_p, together
// with the group law of its Jacobian.
class Curve {
 public:
  // Accepts a quintic or a sextic (lowest degree first). Throws
  // InvalidCurveError for singular or wrong-degree input and
  // UnsupportedModelError for sextics without a rational root.
  static Curve Validate(const Integer& p, const std::vector<Integer>& f_input);

  const FieldRef& field() const { return field_; }
  const Integer& p() const { return field_->modulus(); }
  const Poly& f() const { return f_; }
  const ModelTransform& transform() const { return transform_; }

  Divisor Identity() const;

  // Throws UsageError unless (u, v) is a reduced Mumford pair on this curve.
  Divisor MakeDivisor(Poly u, Poly v) const;
  bool IsValid(const Poly& u, const Poly& v) const;

  Divisor Add(const Divisor& a, const Divisor& b) const;
  CantorStep AddTraced(const Divisor& a, const Divisor& b) const;
  Divisor Negate(const Divisor& a) const;
  Divisor Subtract(const Divisor& a, const Divisor& b) const {
    return Add(a, Negate(b));
  }
  // Double and add; negative n goes through Negate.
  Divisor ScalarMul(const Integer& n, const Divisor& a) const;

  // Uniformly distributed element of Jac(C)(F_p), by rejection sampling on
  // the Mumford pairs.
  Divisor RandomElement(Rng& rng) const;

 private:
  Curve(FieldRef field, Poly f, ModelTransform transform)
      : field_(std::move(field)),
        f_(std::move(f)),
        transform_(std::move(transform)) {}

  template <bool kTrace>
  Divisor Cantor(const Divisor& a, const Divisor& b, CantorStep* step) const;

  // Square roots of f modulo u, as v with deg v < deg u; empty when u
  // supports no divisor.
  std::vector<Poly> MumfordLifts(const Poly& u) const;

  FieldRef field_;
  Poly f_;
  ModelTransform transform_;
};

// The group Jac(C)(F_p) of known order N.
class GroupContext {
 public:
  // Factors N when no factorization is given and N < 2^64. Samples random
  // elements and checks N kills them; throws GroupOrderError otherwise.
  GroupContext(Curve curve, Integer order,
               std::optional<Factorization> order_factors = std::nullopt);

  const Curve& curve() const { return curve_; }
  const Integer& order() const { return order_; }
  const Factorization& order_factors() const { return order_factors_; }

  Divisor Identity() const { return curve_.Identity(); }
  Divisor Add(const Divisor& a, const Divisor& b) const {
    return curve_.Add(a, b);
  }
  Divisor Negate(const Divisor& a) const { return curve_.Negate(a); }
  Divisor ScalarMul(const Integer& n, const Divisor& a) const {
    return curve_.ScalarMul(n, a);
  }
  Divisor RandomElement(Rng& rng) const { return curve_.RandomElement(rng); }

  // Starts from N and strips each prime while the multiple stays trivial.
  Integer ElementOrder(const Divisor& a) const;

  // Order of an element of the Sylow-ell subgroup by repeated
  // multiplication with ell. Throws UsageError if a is not in it.
  Integer SylowElementOrder(const Divisor& a, const Integer& ell) const;

  // ell^(v_ell(N)). Throws UsageError unless ell | N.
  Integer SylowOrder(const Integer& ell) const;

  // (N / N_ell) * a.
  Divisor ProjectToSylow(const Divisor& a, const Integer& ell) const;

  // e * a where e = 1 mod N_ell and e = 0 mod N / N_ell: the exact
  // Sylow-ell component of a.
  Divisor SylowComponent(const Divisor& a, const Integer& ell) const;

  // Primes dividing gcd(N, p - 1), increasing.
  std::vector<Integer> TorsionPrimes() const;

  // Largest divisor of N whose primes all divide p - 1.
  Integer TorsionModulus() const;

 private:
  Curve curve_;
  Integer order_;
  Factorization order_factors_;
};

std::string ToString(const Divisor& d);

}  // namespace hyperjac
