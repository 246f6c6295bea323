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

#include "hyperjac/tate_pairing.h"

#include <optional>

#include "hyperjac/dlp.h"
#include "hyperjac/error.h"

namespace hyperjac {

namespace {

// Leading coefficient at infinity, where x has a pole of order 2 and y of
// order 5.
Fp LeadingCoeff(const CurveFunction& fn) {
  if (!fn.b.IsZero() &&
      (fn.a.IsZero() || 5 + 2 * fn.b.degree() > 2 * fn.a.degree())) {
    return fn.b.LeadingCoeff();
  }
  return fn.a.LeadingCoeff();
}

// Value of the function normalized at infinity on the effective divisor
// (u, v): res(u, a + v b) / lc^deg(u).
Fp EvaluateAt(const CurveFunction& fn, const Divisor& at) {
  const FieldRef& field = at.u().field();
  if (at.IsIdentity()) return field->One();
  Poly w = fn.b.IsZero() ? fn.a : fn.a + at.v() * fn.b;
  return Resultant(at.u(), w % at.u()) /
         LeadingCoeff(fn).Pow(Integer(at.degree()));
}

Fp EvaluateAt(const Poly& fn, const Divisor& at) {
  const FieldRef& field = at.u().field();
  if (at.IsIdentity()) return field->One();
  return Resultant(at.u(), fn % at.u()) /
         fn.LeadingCoeff().Pow(Integer(at.degree()));
}

// Running value of the Miller function at numerator - denominator.
struct MillerAccumulator {
  Fp numerator;
  Fp denominator;

  void Square() {
    numerator *= numerator;
    denominator *= denominator;
  }

  // Multiplies in the step function of one Cantor addition. False on a
  // support collision.
  bool Absorb(const CantorStep& step, const Divisor& plus,
              const Divisor& minus) {
    for (const auto& fn : step.numerators) {
      numerator *= EvaluateAt(fn, plus);
      denominator *= EvaluateAt(fn, minus);
    }
    for (const auto& fn : step.denominators) {
      numerator *= EvaluateAt(fn, minus);
      denominator *= EvaluateAt(fn, plus);
    }
    return !numerator.IsZero() && !denominator.IsZero();
  }
};

// Normalized Miller function f_lambda,g evaluated at plus - minus, or
// nullopt when the evaluation divisor meets the support of a step function.
// end receives lambda * g.
std::optional<Fp> Miller(const Curve& curve, const Divisor& g,
                         const Integer& lambda, const Divisor& plus,
                         const Divisor& minus, Divisor& end) {
  const FieldRef& field = curve.field();
  MillerAccumulator acc{field->One(), field->One()};
  Divisor t = g;
  const std::size_t bits = mpz_sizeinbase(lambda.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    CantorStep dbl = curve.AddTraced(t, t);
    acc.Square();
    if (!acc.Absorb(dbl, plus, minus)) return std::nullopt;
    t = std::move(dbl.sum);
    if (mpz_tstbit(lambda.get_mpz_t(), i)) {
      CantorStep add = curve.AddTraced(t, g);
      if (!acc.Absorb(add, plus, minus)) return std::nullopt;
      t = std::move(add.sum);
    }
  }
  end = std::move(t);
  return acc.numerator / acc.denominator;
}

}  // namespace

void TatePairing::CheckPreconditions(const Divisor& g,
                                     const Integer& lambda) const {
  if (lambda < 1) throw UsageError("pairing order must be positive");
  if ((ctx_.curve().p() - 1) % lambda != 0) {
    throw UsageError("lambda = " + ToString(lambda) + " does not divide p - 1");
  }
  if (ctx_.order() % lambda != 0) {
    throw UsageError("lambda = " + ToString(lambda) +
                     " does not divide the group order");
  }
  if (!ctx_.ScalarMul(lambda, g).IsIdentity()) {
    throw UsageError("first pairing argument " + ToString(g) +
                     " is not killed by lambda = " + ToString(lambda));
  }
}

std::optional<Fp> TatePairing::Evaluate(const Divisor& g, const Divisor& h,
                                        const Integer& lambda, Rng& rng,
                                        int attempts) const {
  const Curve& curve = ctx_.curve();
  if (g.IsIdentity() || h.IsIdentity()) return curve.field()->One();
  // g is represented by A - B and h by S - R; the pairing is
  // f_lambda,A(S - R) / f_lambda,B(S - R).
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Divisor a = g, b = curve.Identity();
    Divisor s = h, r = curve.Identity();
    if (attempt > 0) {
      r = curve.RandomElement(rng);
      s = curve.Add(h, r);
      if (rng.Coin()) {
        s = curve.Add(s, curve.ScalarMul(lambda, curve.RandomElement(rng)));
      }
    }
    if (attempt > 1 && rng.Coin()) {
      b = curve.RandomElement(rng);
      a = curve.Add(g, b);
    }
    Divisor end_a = curve.Identity(), end_b = curve.Identity();
    auto fa = Miller(curve, a, lambda, s, r, end_a);
    if (!fa) continue;
    Fp value = *fa;
    if (!b.IsIdentity()) {
      auto fb = Miller(curve, b, lambda, s, r, end_b);
      if (!fb) continue;
      value = value / *fb;
    }
    if (end_a != end_b) throw InternalError("Miller loop did not reach zero");
    return value;
  }
  return std::nullopt;
}

Fp TatePairing::Raw(const Divisor& g, const Divisor& h, const Integer& lambda,
                    Rng& rng) const {
  CheckPreconditions(g, lambda);
  if (auto value = Evaluate(g, h, lambda, rng, kPairingRetryBudget)) {
    return *value;
  }
  // Tiny groups can leave no rational representation of h off the support;
  // split h = h1 + (h - h1) instead.
  const Curve& curve = ctx_.curve();
  for (int attempt = 0; attempt < kPairingSplitBudget; ++attempt) {
    const Divisor h1 = curve.RandomElement(rng);
    auto first = Evaluate(g, h1, lambda, rng, kPairingSplitAttempts);
    if (!first) continue;
    auto second =
        Evaluate(g, curve.Subtract(h, h1), lambda, rng, kPairingSplitAttempts);
    if (!second) continue;
    return *first * *second;
  }
  throw InternalError(
      "pairing evaluation kept colliding with the support of "
      "the Miller functions");
}

PairingValue TatePairing::Tame(const Divisor& g, const Divisor& h,
                               const Integer& lambda, Rng& rng) const {
  Fp raw = Raw(g, h, lambda, rng);
  return {raw.Pow((ctx_.curve().p() - 1) / lambda), lambda};
}

Integer PairingDlogExponent(const PairingValue& value, const Fp& zeta) {
  return PohligHellman({zeta, value.value, Factor(value.lambda)});
}

}  // namespace hyperjac
