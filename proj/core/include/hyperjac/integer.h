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

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hyperjac {

using Integer = mpz_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

Integer Multiply(const Factorization& factors);

// Trial division up to 2^20, then Pollard-Brent on the cofactor.
Factorization Factor(const Integer& n);

bool IsProbablePrime(const Integer& n);

// Largest e with q^e | n, for n != 0.
unsigned Valuation(const Integer& n, const Integer& q);

Integer IntPow(const Integer& base, unsigned exponent);

std::string ToString(const Integer& n);

// Decimal, optional leading '-'. Throws ParseError.
Integer ParseInteger(std::string_view text);

struct IntegerHash {
  std::size_t operator()(const Integer& n) const {
    return static_cast<std::size_t>(mpz_getlimbn(n.get_mpz_t(), 0));
  }
};

// Seeded randomness. Integer sampling is implemented on top of the raw
// 64-bit stream so results do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  Integer Below(const Integer& bound);

  std::uint64_t Below(std::uint64_t bound);

  bool Coin() { return (engine_() >> 63) != 0; }

  // Independent child stream.
  Rng Fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperjac
