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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperjac/tate_pairing.h"

namespace hyperjac {

inline constexpr int kElementRestartBudget = 64;
inline constexpr int kProbeRestartBudget = 64;
inline constexpr int kSylowIterationBudget = 256;

// Primitive operations issued by the structure algorithms.
struct OperationCounts {
  std::uint64_t orders = 0;
  std::uint64_t scalar_muls = 0;
  std::uint64_t additions = 0;
  std::uint64_t pairings = 0;
  std::uint64_t dlogs = 0;

  OperationCounts& operator+=(const OperationCounts& other);
};

// Working state of the diagonalization for one prime ell. Indices are
// 0-based; after sorting, the live candidates occupy the top of the array.
struct DiagonalizationState {
  Integer ell;
  std::vector<Divisor> gamma;  // 4 candidates in the Sylow-ell subgroup
  std::vector<Divisor> h;      // 4 probes
  std::array<Integer, 4> orders;
  int nu = 4;  // first live index; 4 when every candidate vanished
  Integer lambda0 = 1;
  Integer lambda = 1;
  std::vector<Divisor> g;  // (orders[i] / lambda) * gamma[i], live only
  std::optional<Fp> zeta;
  std::array<std::array<std::optional<Integer>, 4>, 4> alpha;
};

// (lambda0, lambda) with lambda = ell^min(a, v_ell(p - 1)) for
// lambda_nu = ell^a. Throws UsageError unless ell | p - 1 and lambda_nu is a
// positive power of ell.
std::pair<Integer, Integer> ComputeLambda(const Integer& lambda_nu,
                                          const Integer& ell, const Integer& p);

// Replaces the random candidates of the first diagonalization step. Used to
// exercise the retry paths deterministically.
using CandidateSampler = std::function<std::vector<Divisor>(Rng&)>;

struct DiagonalizeOptions {
  CandidateSampler sampler;
  OperationCounts* counts = nullptr;
};

// Pairing diagonalization within the Sylow-ell subgroup. On return the
// candidates are sorted by order and satisfy the diagonal pattern that
// VerifyDirectSum checks. Throws UsageError unless ell | gcd(N, p - 1) and
// GiveUpError when a retry budget runs out.
DiagonalizationState DiagonalizeSylow(const Integer& ell,
                                      const GroupContext& ctx, Rng& rng,
                                      const DiagonalizeOptions& options = {});

struct CertificateCheck {
  bool ok = true;
  std::string reason;
  // Offending entry (row, column), 0-based, when the failure is a matrix
  // entry.
  std::optional<std::pair<int, int>> entry;

  explicit operator bool() const { return ok; }
};

// Recomputes orders, lambda, the scaled elements, a fresh zeta and the full
// pairing matrix of state.gamma against state.h, and checks: orders sorted,
// off-diagonal entries between live indices vanish mod lambda, diagonal
// entries of live indices are nonzero mod ell.
CertificateCheck VerifyDirectSum(const DiagonalizationState& state,
                                 const GroupContext& ctx, Rng& rng);

// Independence of candidates for which no probes are known: pairs the
// order-ell multiples against random probes and checks the resulting matrix
// over F_ell has full rank. A success is a proof; a failure after all
// attempts means the candidates are dependent with high probability.
CertificateCheck CertifyIndependence(const Integer& ell,
                                     const std::vector<Divisor>& candidates,
                                     const GroupContext& ctx, Rng& rng,
                                     int attempts = 8);

struct SylowResult {
  Integer ell;
  Integer sylow_order;
  std::vector<Divisor> generators;  // 4, sorted by order
  std::array<Integer, 4> orders;
  DiagonalizationState certificate;
  int iterations = 0;  // diagonalizations run, including the accepted one
  int give_ups = 0;    // diagonalizations that exhausted a budget
};

struct StructureOptions {
  int iteration_budget = kSylowIterationBudget;
  CandidateSampler sampler;
};

// Repeats the diagonalization until the product of the candidate orders is
// the full Sylow order. Throws GiveUpError after the iteration budget and
// InternalError if an accepted state fails its own certificate.
SylowResult SylowGenerators(const Integer& ell, const GroupContext& ctx,
                            Rng& rng, const StructureOptions& options = {},
                            OperationCounts* counts = nullptr);

struct StructureResult {
  Integer m = 1;
  std::vector<Divisor> generators;  // 4
  std::array<Integer, 4> orders;
  std::vector<SylowResult> per_prime;
  OperationCounts counts;
};

// Generators of Gamma[m] for m built from the given primes: per-prime
// generators summed index-wise. Every prime must divide gcd(N, p - 1).
StructureResult MTorsionGenerators(const GroupContext& ctx,
                                   const std::vector<Integer>& primes, Rng& rng,
                                   const StructureOptions& options = {});

// All primes of gcd(N, p - 1).
StructureResult MTorsionGenerators(const GroupContext& ctx, Rng& rng,
                                   const StructureOptions& options = {});

}  // namespace hyperjac
