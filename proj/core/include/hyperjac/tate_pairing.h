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

#include "hyperjac/jacobian.h"

namespace hyperjac {

// A lambda-th root of unity produced by the tame Tate pairing.
struct PairingValue {
  Fp value;
  Integer lambda;
};

// Evaluation divisors are resampled at most this many times after a
// support collision, before falling back to splitting the second argument
// into two random summands: at most kPairingSplitBudget splits, each half
// resampled at most kPairingSplitAttempts times.
inline constexpr int kPairingRetryBudget = 32;
inline constexpr int kPairingSplitBudget = 64;
inline constexpr int kPairingSplitAttempts = 8;

// The tame Tate pairing Gamma[lambda] x Gamma / lambda Gamma -> mu_lambda,
// computed with Miller's algorithm entirely inside F_p.
//
// Step functions are normalized at infinity, so both arguments may be
// represented through affine effective divisors: g by A - B, h by S - R,
// with S - R in the class of h modulo lambda Gamma. The pairing value is
// then f_lambda,A(S - R) / f_lambda,B(S - R). The first attempt uses A = g,
// S = h and B = R = 0; after a support collision R and, from the third
// attempt on, B are drawn at random. If every attempt collides, h is
// split into two random summands evaluated separately. Each step function
// a(x) + y b(x) is evaluated at an effective divisor (u, v) as
// res(u, a + v b), the product of its values at the (possibly conjugate)
// points of the divisor.
class TatePairing {
 public:
  explicit TatePairing(const GroupContext& ctx) : ctx_(ctx) {}

  // A representative of e_lambda(g, h) in F_p^* / (F_p^*)^lambda. Throws
  // UsageError if lambda does not divide gcd(N, p - 1) or lambda g != 0.
  Fp Raw(const Divisor& g, const Divisor& h, const Integer& lambda,
         Rng& rng) const;

  // Raw(...)^((p - 1) / lambda).
  PairingValue Tame(const Divisor& g, const Divisor& h, const Integer& lambda,
                    Rng& rng) const;

 private:
  void CheckPreconditions(const Divisor& g, const Integer& lambda) const;
  std::optional<Fp> Evaluate(const Divisor& g, const Divisor& h,
                             const Integer& lambda, Rng& rng,
                             int attempts) const;

  const GroupContext& ctx_;
};

// alpha in [0, lambda) with zeta^alpha = value. zeta must have order
// exactly value.lambda. Throws NotInSubgroupError otherwise.
Integer PairingDlogExponent(const PairingValue& value, const Fp& zeta);

}  // namespace hyperjac
