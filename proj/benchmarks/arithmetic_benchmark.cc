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

#include <benchmark/benchmark.h>

#include "hyperjac/curve_file.h"
#include "hyperjac/dlp.h"
#include "hyperjac/structure.h"
#include "hyperjac/tate_pairing.h"

namespace hyperjac {
namespace {

// Curve with p ~ 2^64 and smooth known group order.
const GroupContext& Context() {
  static const GroupContext ctx =
      MakeGroupContext(ReadCurveFile(HYPERJAC_BENCH_CURVE));
  return ctx;
}

void BM_CantorAdd(benchmark::State& state) {
  const GroupContext& ctx = Context();
  Rng rng(1);
  Divisor a = ctx.RandomElement(rng);
  const Divisor b = ctx.RandomElement(rng);
  for (auto _ : state) {
    a = ctx.Add(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_CantorAdd);

void BM_CantorDouble(benchmark::State& state) {
  const GroupContext& ctx = Context();
  Rng rng(2);
  Divisor a = ctx.RandomElement(rng);
  for (auto _ : state) {
    a = ctx.Add(a, a);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_CantorDouble);

void BM_ScalarMulByOrder(benchmark::State& state) {
  const GroupContext& ctx = Context();
  Rng rng(3);
  const Divisor a = ctx.RandomElement(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.ScalarMul(ctx.order(), a));
}
BENCHMARK(BM_ScalarMulByOrder);

void BM_RandomElement(benchmark::State& state) {
  const GroupContext& ctx = Context();
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.RandomElement(rng));
}
BENCHMARK(BM_RandomElement);

void BM_TatePairing(benchmark::State& state) {
  const GroupContext& ctx = Context();
  const Integer lambda(state.range(0));
  Rng rng(5);
  Divisor g = ctx.RandomElement(rng);
  const Integer order = ctx.ElementOrder(g);
  Integer d;
  mpz_gcd(d.get_mpz_t(), order.get_mpz_t(), lambda.get_mpz_t());
  g = ctx.ScalarMul(order / d, g);
  const Divisor h = ctx.RandomElement(rng);
  const TatePairing pairing(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing.Tame(g, h, lambda, rng));
  }
}
BENCHMARK(BM_TatePairing)->Arg(2)->Arg(3)->Arg(16);

void BM_PohligHellman(benchmark::State& state) {
  const GroupContext& ctx = Context();
  const FieldRef& field = ctx.curve().field();
  // A smooth divisor of p - 1.
  const Integer lambda(16 * 3 * 17 * 31 * 83);
  const Factorization factors = Factor(lambda);
  Rng rng(6);
  const Fp zeta = field->PrimitiveRootOfUnity(lambda, factors, rng);
  const Fp target = zeta.Pow(Integer(123456));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PohligHellman({zeta, target, factors}));
  }
}
BENCHMARK(BM_PohligHellman);

void BM_TorsionGenerators(benchmark::State& state) {
  const GroupContext& ctx = Context();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(MTorsionGenerators(ctx, rng));
  }
}
BENCHMARK(BM_TorsionGenerators)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hyperjac

BENCHMARK_MAIN();
