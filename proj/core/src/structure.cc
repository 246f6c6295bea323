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

#include "hyperjac/structure.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "hyperjac/error.h"

namespace hyperjac {

OperationCounts& OperationCounts::operator+=(const OperationCounts& other) {
  orders += other.orders;
  scalar_muls += other.scalar_muls;
  additions += other.additions;
  pairings += other.pairings;
  dlogs += other.dlogs;
  return *this;
}

namespace {

// Group and pairing operations with bookkeeping.
class Ops {
 public:
  Ops(const GroupContext& ctx, OperationCounts* counts)
      : ctx_(ctx), pairing_(ctx), counts_(counts ? counts : &local_) {}

  Divisor Add(const Divisor& a, const Divisor& b) {
    ++counts_->additions;
    return ctx_.Add(a, b);
  }

  Divisor ScalarMul(const Integer& n, const Divisor& a) {
    ++counts_->scalar_muls;
    return ctx_.ScalarMul(n, a);
  }

  Integer Order(const Divisor& a, const Integer& ell) {
    ++counts_->orders;
    return ctx_.SylowElementOrder(a, ell);
  }

  PairingValue Pair(const Divisor& g, const Divisor& h, const Integer& lambda,
                    Rng& rng) {
    ++counts_->pairings;
    return pairing_.Tame(g, h, lambda, rng);
  }

  Integer Dlog(const PairingValue& value, const Fp& zeta) {
    ++counts_->dlogs;
    return PairingDlogExponent(value, zeta);
  }

  Divisor Random(Rng& rng) { return ctx_.RandomElement(rng); }

 private:
  const GroupContext& ctx_;
  TatePairing pairing_;
  OperationCounts local_;
  OperationCounts* counts_;
};

Integer Mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

Integer InverseMod(const Integer& a, const Integer& n) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw InternalError("no inverse of " + ToString(a) + " mod " + ToString(n));
  }
  return r;
}

void CheckTorsionPrime(const Integer& ell, const GroupContext& ctx) {
  if (ell < 2 || !IsProbablePrime(ell)) {
    throw UsageError(ToString(ell) + " is not prime");
  }
  if (ctx.order() % ell != 0 || (ctx.curve().p() - 1) % ell != 0) {
    throw UsageError(ToString(ell) + " does not divide gcd(N, p - 1)");
  }
}

int FirstLive(const std::array<Integer, 4>& orders) {
  int nu = 0;
  while (nu < 4 && orders[nu] == 1) ++nu;
  return nu;
}

// Stable sort of the first count candidates by order.
void SortCandidates(DiagonalizationState& s, int count) {
  std::vector<int> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return s.orders[a] < s.orders[b]; });
  std::vector<Divisor> gamma = s.gamma;
  std::array<Integer, 4> orders = s.orders;
  for (int i = 0; i < count; ++i) {
    gamma[i] = s.gamma[perm[i]];
    orders[i] = s.orders[perm[i]];
  }
  s.gamma = std::move(gamma);
  s.orders = orders;
}

enum class Pass { kDone, kRestart, kNewProbes, kNewElements };

// One sweep k = 3, ..., 0 over fixed candidates and probes.
Pass Sweep(DiagonalizationState& s, const GroupContext& ctx, Ops& ops,
           Rng& rng) {
  const Integer& ell = s.ell;
  const Integer& p = ctx.curve().p();
  for (auto& row : s.alpha) row.fill(std::nullopt);
  s.zeta.reset();
  for (int k = 3; k >= 0; --k) {
    // Orders of the rows still in K; rows above k are final.
    bool changed = false;
    for (int i = 0; i <= k; ++i) {
      Integer order = ops.Order(s.gamma[i], ell);
      if (k < 3 && order != s.orders[i]) changed = true;
      s.orders[i] = order;
    }
    if (changed) return Pass::kRestart;
    if (k == 3) SortCandidates(s, 4);
    s.nu = FirstLive(s.orders);
    if (s.nu == 4) return Pass::kNewElements;
    std::tie(s.lambda0, s.lambda) = ComputeLambda(s.orders[s.nu], ell, p);
    if (k < s.nu) return Pass::kDone;

    std::vector<std::optional<Divisor>> g(4);
    for (int i = s.nu; i <= k; ++i) {
      g[i] = ops.ScalarMul(s.orders[i] / s.lambda, s.gamma[i]);
    }

    std::vector<PairingValue> row;
    bool trivial = true;
    const Integer socle = s.lambda / ell;
    for (int j = 0; j <= k; ++j) {
      row.push_back(ops.Pair(*g[k], s.h[j], s.lambda, rng));
      if (!row.back().value.Pow(socle).IsOne()) trivial = false;
    }
    if (trivial) return Pass::kNewProbes;

    if (!s.zeta) {
      s.zeta = ctx.curve().field()->PrimitiveRootOfUnity(s.lambda, rng);
    }
    std::vector<Integer> alpha_row(k + 1);
    for (int j = 0; j <= k; ++j) alpha_row[j] = ops.Dlog(row[j], *s.zeta);
    int pivot = 0;
    while (alpha_row[pivot] % ell == 0) ++pivot;
    std::swap(s.h[pivot], s.h[k]);
    std::swap(alpha_row[pivot], alpha_row[k]);

    std::vector<Integer> alpha_col(k, 0);
    for (int i = s.nu; i < k; ++i) {
      alpha_col[i] = ops.Dlog(ops.Pair(*g[i], s.h[k], s.lambda, rng), *s.zeta);
    }

    const Integer inv = InverseMod(alpha_row[k], s.lambda);
    for (int j = 0; j < k; ++j) {
      const Integer beta = Mod(inv * alpha_row[j], s.lambda);
      if (beta != 0) {
        s.h[j] = ops.Add(s.h[j], ops.ScalarMul(-beta, s.h[k]));
      }
    }
    for (int i = s.nu; i < k; ++i) {
      const Integer beta = Mod(inv * alpha_col[i], s.lambda);
      if (beta != 0) {
        const Integer c = beta * (s.orders[k] / s.orders[i]);
        s.gamma[i] = ops.Add(s.gamma[i], ops.ScalarMul(-c, s.gamma[k]));
      }
    }

    s.alpha[k][k] = alpha_row[k];
    for (int j = 0; j < k; ++j) s.alpha[k][j] = Integer(0);
    for (int i = s.nu; i < k; ++i) s.alpha[i][k] = Integer(0);
  }
  return Pass::kDone;
}

}  // namespace

std::pair<Integer, Integer> ComputeLambda(const Integer& lambda_nu,
                                          const Integer& ell,
                                          const Integer& p) {
  if ((p - 1) % ell != 0) {
    throw UsageError(ToString(ell) + " does not divide p - 1");
  }
  if (lambda_nu <= 1) {
    throw UsageError("lambda_nu must be a positive power of ell");
  }
  const unsigned a = Valuation(lambda_nu, ell);
  if (IntPow(ell, a) != lambda_nu) {
    throw UsageError(ToString(lambda_nu) + " is not a power of " +
                     ToString(ell));
  }
  const Integer lambda = IntPow(ell, std::min(a, Valuation(p - 1, ell)));
  return {lambda_nu / lambda, lambda};
}

DiagonalizationState DiagonalizeSylow(const Integer& ell,
                                      const GroupContext& ctx, Rng& rng,
                                      const DiagonalizeOptions& options) {
  CheckTorsionPrime(ell, ctx);
  Ops ops(ctx, options.counts);
  const Integer cofactor = ctx.order() / ctx.SylowOrder(ell);

  DiagonalizationState s;
  s.ell = ell;
  for (int attempt = 0; attempt < kElementRestartBudget; ++attempt) {
    std::vector<Divisor> raw;
    if (options.sampler) {
      raw = options.sampler(rng);
      if (raw.size() != 4) throw UsageError("sampler must return 4 elements");
    } else {
      for (int i = 0; i < 4; ++i) raw.push_back(ops.Random(rng));
    }
    s.gamma.clear();
    for (const Divisor& d : raw) s.gamma.push_back(ops.ScalarMul(cofactor, d));
    if (std::all_of(s.gamma.begin(), s.gamma.end(),
                    [](const Divisor& d) { return d.IsIdentity(); })) {
      continue;
    }
    s.h.clear();
    for (int j = 0; j < 4; ++j) s.h.push_back(ops.Random(rng));

    int probe_restarts = 0;
    Pass pass = Pass::kRestart;
    while (pass == Pass::kRestart || pass == Pass::kNewProbes) {
      pass = Sweep(s, ctx, ops, rng);
      if (pass == Pass::kNewProbes) {
        if (++probe_restarts > kProbeRestartBudget) {
          throw GiveUpError("diagonalization for ell = " + ToString(ell) +
                            ": probe budget of " +
                            std::to_string(kProbeRestartBudget) +
                            " exhausted after " + std::to_string(attempt + 1) +
                            " element choices");
        }
        for (int j = 0; j < 4; ++j) s.h[j] = ops.Random(rng);
      }
    }
    if (pass == Pass::kNewElements) continue;

    s.g.clear();
    for (int i = 0; i < 4; ++i) {
      s.g.push_back(i < s.nu
                        ? ctx.Identity()
                        : ops.ScalarMul(s.orders[i] / s.lambda, s.gamma[i]));
    }
    return s;
  }
  throw GiveUpError("diagonalization for ell = " + ToString(ell) +
                    ": no nonzero candidate in " +
                    std::to_string(kElementRestartBudget) + " element choices");
}

CertificateCheck VerifyDirectSum(const DiagonalizationState& state,
                                 const GroupContext& ctx, Rng& rng) {
  CertificateCheck out;
  auto fail = [&](std::string reason,
                  std::optional<std::pair<int, int>> entry = std::nullopt) {
    out.ok = false;
    out.reason = std::move(reason);
    out.entry = entry;
    return out;
  };
  const Integer& ell = state.ell;
  if (state.gamma.size() != 4 || state.h.size() != 4) {
    return fail("certificate needs 4 candidates and 4 probes");
  }
  std::array<Integer, 4> orders;
  for (int i = 0; i < 4; ++i) {
    try {
      orders[i] = ctx.SylowElementOrder(state.gamma[i], ell);
    } catch (const UsageError&) {
      return fail("candidate " + std::to_string(i + 1) +
                  " is not in the Sylow-" + ToString(ell) + " subgroup");
    }
  }
  for (int i = 0; i + 1 < 4; ++i) {
    if (orders[i] > orders[i + 1]) {
      return fail("candidate orders are not sorted at position " +
                  std::to_string(i + 1));
    }
  }
  const int nu = FirstLive(orders);
  if (nu == 4) return out;
  const auto [lambda0, lambda] =
      ComputeLambda(orders[nu], ell, ctx.curve().p());
  const TatePairing pairing(ctx);
  const Fp zeta = ctx.curve().field()->PrimitiveRootOfUnity(lambda, rng);
  for (int i = nu; i < 4; ++i) {
    const Divisor g = ctx.ScalarMul(orders[i] / lambda, state.gamma[i]);
    for (int j = nu; j < 4; ++j) {
      const Integer a =
          PairingDlogExponent(pairing.Tame(g, state.h[j], lambda, rng), zeta);
      const std::string where = "alpha(" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") = " + ToString(a);
      if (i != j && a % lambda != 0) {
        return fail(where + " is not 0 mod " + ToString(lambda),
                    std::make_pair(i, j));
      }
      if (i == j && a % ell == 0) {
        return fail(where + " is 0 mod " + ToString(ell), std::make_pair(i, j));
      }
    }
  }
  return out;
}

CertificateCheck CertifyIndependence(const Integer& ell,
                                     const std::vector<Divisor>& candidates,
                                     const GroupContext& ctx, Rng& rng,
                                     int attempts) {
  CertificateCheck out;
  CheckTorsionPrime(ell, ctx);
  std::vector<Divisor> socle;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].IsIdentity()) continue;
    Integer order;
    try {
      order = ctx.SylowElementOrder(candidates[i], ell);
    } catch (const UsageError&) {
      out.ok = false;
      out.reason = "candidate " + std::to_string(i + 1) +
                   " is not in the Sylow-" + ToString(ell) + " subgroup";
      return out;
    }
    socle.push_back(ctx.ScalarMul(order / ell, candidates[i]));
  }
  const std::size_t n = socle.size();
  if (n == 0) return out;

  const TatePairing pairing(ctx);
  const Fp zeta = ctx.curve().field()->PrimitiveRootOfUnity(ell, rng);
  std::size_t best = 0;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::size_t cols = n + 2;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const Divisor h = ctx.RandomElement(rng);
      for (std::size_t i = 0; i < n; ++i) {
        m[i][j] =
            PairingDlogExponent(pairing.Tame(socle[i], h, ell, rng), zeta);
      }
    }
    // Row echelon form over F_ell.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
      std::size_t r = rank;
      while (r < n && m[r][c] % ell == 0) ++r;
      if (r == n) continue;
      std::swap(m[r], m[rank]);
      const Integer inv = InverseMod(m[rank][c], ell);
      for (std::size_t i = rank + 1; i < n; ++i) {
        const Integer factor = Mod(m[i][c] * inv, ell);
        for (std::size_t j = c; j < cols; ++j) {
          m[i][j] = Mod(m[i][j] - factor * m[rank][j], ell);
        }
      }
      ++rank;
    }
    if (rank == n) return out;
    best = std::max(best, rank);
  }
  out.ok = false;
  out.reason = "order-" + ToString(ell) + " multiples have pairing rank " +
               std::to_string(best) + " < " + std::to_string(n) +
               "; candidates are dependent";
  return out;
}

SylowResult SylowGenerators(const Integer& ell, const GroupContext& ctx,
                            Rng& rng, const StructureOptions& options,
                            OperationCounts* counts) {
  CheckTorsionPrime(ell, ctx);
  SylowResult result;
  result.ell = ell;
  result.sylow_order = ctx.SylowOrder(ell);
  DiagonalizeOptions diag;
  diag.sampler = options.sampler;
  diag.counts = counts;
  for (int it = 0; it < options.iteration_budget; ++it) {
    ++result.iterations;
    DiagonalizationState state;
    try {
      state = DiagonalizeSylow(ell, ctx, rng, diag);
    } catch (const GiveUpError&) {
      ++result.give_ups;
      continue;
    }
    Integer product = 1;
    for (const Integer& order : state.orders) product *= order;
    if (product != result.sylow_order) continue;
    const CertificateCheck check = VerifyDirectSum(state, ctx, rng);
    if (!check) {
      throw InternalError("diagonalization produced an invalid certificate: " +
                          check.reason);
    }
    result.generators = state.gamma;
    result.orders = state.orders;
    result.certificate = std::move(state);
    return result;
  }
  throw GiveUpError("Sylow-" + ToString(ell) + " generators not found in " +
                    std::to_string(result.iterations) + " iterations (" +
                    std::to_string(result.give_ups) + " gave up)");
}

StructureResult MTorsionGenerators(const GroupContext& ctx,
                                   const std::vector<Integer>& primes, Rng& rng,
                                   const StructureOptions& options) {
  for (const Integer& ell : primes) CheckTorsionPrime(ell, ctx);
  StructureResult result;
  result.orders.fill(1);
  for (int i = 0; i < 4; ++i) result.generators.push_back(ctx.Identity());
  for (const Integer& ell : primes) {
    SylowResult sylow = SylowGenerators(ell, ctx, rng, options, &result.counts);
    for (int i = 0; i < 4; ++i) {
      result.generators[i] = ctx.Add(result.generators[i], sylow.generators[i]);
      ++result.counts.additions;
      result.orders[i] *= sylow.orders[i];
    }
    result.m *= sylow.sylow_order;
    result.per_prime.push_back(std::move(sylow));
  }
  return result;
}

StructureResult MTorsionGenerators(const GroupContext& ctx, Rng& rng,
                                   const StructureOptions& options) {
  return MTorsionGenerators(ctx, ctx.TorsionPrimes(), rng, options);
}

}  // namespace hyperjac
