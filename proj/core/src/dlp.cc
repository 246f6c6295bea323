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

#include "hyperjac/dlp.h"

#include <unordered_map>

#include "hyperjac/error.h"

namespace hyperjac {

Integer PrimeOrderLog(const Fp& base, const Fp& target, const Integer& q) {
  if (q < kBsgsThreshold) {
    Fp acc = base.field()->One();
    for (unsigned long k = 0; k < q.get_ui(); ++k) {
      if (acc == target) return k;
      acc *= base;
    }
    throw NotInSubgroupError("target not in the subgroup generated by base");
  }
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 80) {
    throw UsageError("prime digit " + ToString(q) + " too large for BSGS");
  }
  Integer m = sqrt(q);
  if (m * m < q) ++m;
  std::unordered_map<Integer, Integer, IntegerHash> baby;
  Fp acc = base.field()->One();
  for (Integer j = 0; j < m; ++j) {
    baby.emplace(acc.value(), j);
    acc *= base;
  }
  const Fp giant = base.Pow(m).Inverse();
  Fp gamma = target;
  for (Integer i = 0; i < m; ++i) {
    auto it = baby.find(gamma.value());
    if (it != baby.end()) return Integer((i * m + it->second) % q);
    gamma *= giant;
  }
  throw NotInSubgroupError("target not in the subgroup generated by base");
}

Integer PohligHellman(const DlogInstance& instance) {
  const Integer order = Multiply(instance.order_factors);
  if (!instance.base.Pow(order).IsOne()) {
    throw UsageError("base is not killed by the stated order");
  }
  Integer alpha = 0;
  Integer modulus = 1;
  for (const auto& [q, e] : instance.order_factors) {
    const Integer qe = IntPow(q, e);
    const Integer cofactor = order / qe;
    const Fp gamma = instance.base.Pow(cofactor);
    const Fp t = instance.target.Pow(cofactor);
    const Fp digit_base = gamma.Pow(IntPow(q, e - 1));
    // x = sum d_k q^k, one digit at a time.
    Integer x = 0;
    Integer qk = 1;
    for (unsigned k = 0; k < e; ++k) {
      const Fp h = (gamma.Pow(-x) * t).Pow(IntPow(q, e - 1 - k));
      x += PrimeOrderLog(digit_base, h, q) * qk;
      qk *= q;
    }
    if (gamma.Pow(x) != t) {
      throw NotInSubgroupError("target not in the subgroup generated by base");
    }
    // CRT merge of alpha mod modulus with x mod qe.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), qe.get_mpz_t());
    Integer step = ((x - alpha) % qe + qe) % qe * inv % qe;
    alpha += modulus * step;
    modulus *= qe;
  }
  if (instance.base.Pow(alpha) != instance.target) {
    throw NotInSubgroupError("target not in the subgroup generated by base");
  }
  return alpha;
}

}  // namespace hyperjac
