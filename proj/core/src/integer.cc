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

#include "hyperjac/integer.h"

#include <algorithm>
#include <map>

#include "hyperjac/error.h"

namespace hyperjac {

Integer Multiply(const Factorization& factors) {
  Integer n = 1;
  for (const auto& [q, e] : factors) {
    n *= IntPow(q, e);
  }
  return n;
}

bool IsProbablePrime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

unsigned Valuation(const Integer& n, const Integer& q) {
  if (n == 0) throw UsageError("valuation of zero");
  if (q < 2) throw UsageError("valuation base must be at least 2");
  unsigned e = 0;
  Integer m = n;
  while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    ++e;
  }
  return e;
}

Integer IntPow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string ToString(const Integer& n) { return n.get_str(10); }

Integer ParseInteger(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty integer");
  s = s.substr(first, last - first + 1);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    throw ParseError("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

namespace {

Integer PollardBrent(const Integer& n, Rng& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (true) {
    Integer y = rng.Below(n - 1) + 1;
    Integer c = rng.Below(n - 1) + 1;
    const unsigned m = 128;
    Integer g = 1, q = 1, x, ys;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min<unsigned long>(m, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void FactorInto(const Integer& n, std::map<Integer, unsigned>& out, Rng& rng) {
  if (n == 1) return;
  if (IsProbablePrime(n)) {
    ++out[n];
    return;
  }
  // Rho is slow on prime powers; take exact roots first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, unsigned> inner;
        FactorInto(root, inner, rng);
        for (const auto& [q, e] : inner) out[q] += e * k;
        return;
      }
    }
  }
  Integer d = PollardBrent(n, rng);
  FactorInto(d, out, rng);
  FactorInto(Integer(n / d), out, rng);
}

}  // namespace

Factorization Factor(const Integer& n) {
  if (n < 1) throw UsageError("can only factor positive integers");
  std::map<Integer, unsigned> found;
  Integer m = n;
  for (unsigned long q = 2; q < (1UL << 20); q += (q == 2 ? 1 : 2)) {
    if (Integer(q) * q > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      m /= q;
      ++found[Integer(q)];
    }
  }
  if (m > 1) {
    Rng rng(0x5eed);
    FactorInto(m, found, rng);
  }
  Factorization result;
  for (const auto& [q, e] : found) result.push_back({q, e});
  return result;
}

Integer Rng::Below(const Integer& bound) {
  if (bound <= 0) throw UsageError("Rng::Below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  Integer candidate;
  do {
    candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = engine_();
      if (i == 0 && top_bits < 64) w >>= (64 - top_bits);
      candidate <<= 64;
      mpz_class word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      candidate += word;
    }
  } while (candidate >= bound);
  return candidate;
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::Below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t w;
  do {
    w = engine_();
  } while (w >= limit);
  return w % bound;
}

}  // namespace hyperjac
