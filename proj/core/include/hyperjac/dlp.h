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

#include "hyperjac/finite_field.h"

namespace hyperjac {

// base has multiplicative order exactly prod(order_factors).
struct DlogInstance {
  Fp base;
  Fp target;
  Factorization order_factors;
};

// Prime digits at or above this size use baby-step giant-step.
inline constexpr unsigned long kBsgsThreshold = 64;

// Pohlig-Hellman: CRT over the prime powers of the order, digit-by-digit
// lifting within each, and exhaustion or BSGS per digit. Returns alpha in
// [0, order) with base^alpha = target. Throws NotInSubgroupError when target
// is outside <base>.
Integer PohligHellman(const DlogInstance& instance);

// Logarithm of target in the group of prime order q generated by base.
Integer PrimeOrderLog(const Fp& base, const Fp& target, const Integer& q);

}  // namespace hyperjac
