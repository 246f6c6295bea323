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

// Acceptance checks. Prints one [PASS] or [FAIL] line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.h"
#include "hyperjac/dlp.h"
#include "hyperjac/error.h"
#include "hyperjac/structure.h"
#include "hyperjac/tate_pairing.h"
#include "test_util.h"

namespace hyperjac::acceptance {
namespace {

using test::Fixture;
using test::LoadFixture;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Fixed(double x, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Integer Gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Primes of gcd(N, p - 1) for a fixture.
std::vector<Integer> PairingPrimes(const GroupContext& ctx) {
  return ctx.TorsionPrimes();
}

Divisor TorsionElement(const GroupContext& ctx, const Integer& lambda,
                       Rng& rng) {
  const Divisor a = ctx.RandomElement(rng);
  const Integer order = ctx.ElementOrder(a);
  return ctx.ScalarMul(order / Gcd(order, lambda), a);
}

// Curves with p in {3, 5, 7, 11, 13}.
const std::vector<std::string>& ArithmeticCurves() {
  static const std::vector<std::string> names = {
      "p3_elementary", "p3_cyclic",     "p5",
      "p5_trivial_m",  "p7_two_primes", "p7_rank2",
      "p11",           "p11_ell5",      "p13_two_primes"};
  return names;
}

// Tiny curves with at least one prime in gcd(N, p - 1).
std::vector<std::string> TorsionCurves() {
  std::vector<std::string> out;
  for (const std::string& name : test::TinyCurves()) {
    if (LoadFixture(name).ctx.TorsionModulus() > 1) out.push_back(name);
  }
  return out;
}

Outcome CantorArithmetic() {
  Timer timer;
  std::uint64_t exhaustive = 0, random = 0, mismatches = 0, axioms = 0,
                axiom_failures = 0;
  for (const std::string& name : ArithmeticCurves()) {
    const Fixture fx = LoadFixture(name);
    const Curve& c = fx.ctx.curve();
    const auto group = oracle::EnumeratedGroup::Enumerate(c);
    std::vector<Divisor> all;
    for (std::size_t a = 0; a < group.size(); ++a) {
      all.push_back(group.ToDivisor(c, a));
    }
    auto check = [&](std::size_t a, std::size_t b) {
      if (group.IndexOf(c.Add(all[a], all[b])) != group.Add(a, b)) ++mismatches;
    };
    if (fx.desc.p <= 5) {
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = 0; b < group.size(); ++b) check(a, b);
      }
      exhaustive += group.size() * group.size();
    } else {
      Rng rng(101);
      for (int i = 0; i < 10000; ++i) {
        check(rng.Below(group.size()), rng.Below(group.size()));
      }
      random += 10000;
    }
    Rng rng(102);
    for (int i = 0; i < 1000; ++i) {
      const Divisor a = c.RandomElement(rng), b = c.RandomElement(rng),
                    d = c.RandomElement(rng);
      const bool ok = c.Add(c.Add(a, b), d) == c.Add(a, c.Add(b, d)) &&
                      c.Add(a, b) == c.Add(b, a) &&
                      c.Add(a, c.Identity()) == a &&
                      c.Add(a, c.Negate(a)).IsIdentity();
      if (!ok) ++axiom_failures;
      ++axioms;
    }
  }
  const double seconds = timer.Seconds();
  Outcome out;
  out.pass = mismatches == 0 && axiom_failures == 0 && seconds < 60;
  out.detail = std::to_string(ArithmeticCurves().size()) + " curves, " +
               std::to_string(exhaustive) + " exhaustive + " +
               std::to_string(random) + " random pairs, " +
               std::to_string(mismatches) + " mismatches; " +
               std::to_string(axioms) + " axiom triples, " +
               std::to_string(axiom_failures) + " failures; " + Fixed(seconds) +
               " s (limit 60 s)";
  return out;
}

Outcome PairingBilinearity() {
  std::uint64_t samples = 0, failures = 0, torsion_checked = 0, degenerate = 0;
  std::vector<std::string> names = TorsionCurves();
  names.push_back("p2e64_split");
  for (const std::string& name : names) {
    const Fixture fx = LoadFixture(name);
    const GroupContext& ctx = fx.ctx;
    const TatePairing pairing(ctx);
    for (const Integer& ell : PairingPrimes(ctx)) {
      Rng rng(201);
      for (int i = 0; i < 200; ++i) {
        const Divisor g1 = TorsionElement(ctx, ell, rng);
        const Divisor g2 = TorsionElement(ctx, ell, rng);
        const Divisor h1 = ctx.RandomElement(rng);
        const Divisor h2 = ctx.RandomElement(rng);
        const Fp t11 = pairing.Tame(g1, h1, ell, rng).value;
        const bool left = pairing.Tame(ctx.Add(g1, g2), h1, ell, rng).value ==
                          t11 * pairing.Tame(g2, h1, ell, rng).value;
        const bool right = pairing.Tame(g1, ctx.Add(h1, h2), ell, rng).value ==
                           t11 * pairing.Tame(g1, h2, ell, rng).value;
        if (!left || !right) ++failures;
        ++samples;
      }
      if (fx.desc.p > oracle::kMaxPrime) continue;
      const auto group = oracle::EnumeratedGroup::Enumerate(ctx.curve());
      const std::uint64_t l = ell.get_ui();
      for (std::size_t a = 0; a < group.size(); ++a) {
        if (a == group.identity() || l % group.Order(a) != 0) continue;
        const Divisor g = group.ToDivisor(ctx.curve(), a);
        bool found = false;
        for (std::size_t b = 0; b < group.size() && !found; ++b) {
          found = !pairing.Tame(g, group.ToDivisor(ctx.curve(), b), ell, rng)
                       .value.IsOne();
        }
        if (!found) ++degenerate;
        ++torsion_checked;
      }
    }
  }
  Outcome out;
  out.pass = failures == 0 && degenerate == 0;
  out.detail = std::to_string(samples) + " bilinearity samples over " +
               std::to_string(names.size()) + " curves, " +
               std::to_string(failures) + " failures; " +
               std::to_string(torsion_checked) + " nonzero torsion elements, " +
               std::to_string(degenerate) + " without a nontrivial partner";
  return out;
}

Outcome ClassInvariance() {
  std::uint64_t samples = 0, failures = 0;
  std::vector<std::string> names = TorsionCurves();
  names.push_back("p2e64_split");
  for (const std::string& name : names) {
    const Fixture fx = LoadFixture(name);
    const GroupContext& ctx = fx.ctx;
    const TatePairing pairing(ctx);
    for (const Integer& ell : PairingPrimes(ctx)) {
      // The largest power of ell dividing gcd(N, p - 1) as well as ell.
      const Integer big = Gcd(ctx.SylowOrder(ell),
                              IntPow(ell, Valuation(ctx.curve().p() - 1, ell)));
      std::vector<Integer> lambdas = {ell};
      if (big != ell) lambdas.push_back(big);
      for (const Integer& lambda : lambdas) {
        Rng rng(301);
        for (int i = 0; i < 200; ++i) {
          const Divisor g = TorsionElement(ctx, lambda, rng);
          const Divisor h = ctx.RandomElement(rng);
          const Divisor r = ctx.RandomElement(rng);
          const Divisor shifted = ctx.Add(h, ctx.ScalarMul(lambda, r));
          if (pairing.Tame(g, h, lambda, rng).value !=
              pairing.Tame(g, shifted, lambda, rng).value) {
            ++failures;
          }
          ++samples;
        }
      }
    }
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = std::to_string(samples) + " samples over " +
               std::to_string(names.size()) + " curves, " +
               std::to_string(failures) + " failures";
  return out;
}

Outcome CertificateSoundness() {
  std::uint64_t runs = 0, certified = 0, dependent = 0, rejected = 0,
                give_ups = 0, pairs = 0;
  for (const std::string& name : TorsionCurves()) {
    const Fixture fx = LoadFixture(name);
    const GroupContext& ctx = fx.ctx;
    const auto group = oracle::EnumeratedGroup::Enumerate(ctx.curve());
    for (const Integer& ell : ctx.TorsionPrimes()) {
      ++pairs;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ++runs;
        Rng rng(400000 + seed);
        DiagonalizationState s;
        try {
          s = DiagonalizeSylow(ell, ctx, rng);
        } catch (const GiveUpError&) {
          ++give_ups;
          continue;
        }
        Rng check_rng(500000 + seed);
        if (!VerifyDirectSum(s, ctx, check_rng)) {
          ++rejected;
          continue;
        }
        ++certified;
        std::uint64_t product = 1;
        for (const Integer& o : s.orders) product *= o.get_ui();
        if (group.SubgroupSpan(test::Indices(group, s.gamma)) != product) {
          ++dependent;
        }
      }
    }
  }
  Outcome out;
  out.pass = dependent == 0 && rejected == 0 && certified > 0;
  out.detail = std::to_string(runs) + " runs over " + std::to_string(pairs) +
               " (curve, prime) pairs: " + std::to_string(certified) +
               " certified, " + std::to_string(rejected) +
               " returned but rejected, " + std::to_string(give_ups) +
               " gave up, " + std::to_string(dependent) +
               " certified but dependent";
  return out;
}

Outcome TorsionCompleteness() {
  Outcome out;
  std::ostringstream detail;
  double worst = 1.0;
  std::string worst_name;
  const std::vector<std::string>& names = test::TinyCurves();
  for (const std::string& name : names) {
    const Fixture fx = LoadFixture(name);
    const GroupContext& ctx = fx.ctx;
    const auto group = oracle::EnumeratedGroup::Enumerate(ctx.curve());
    // m from the enumerated order, independently of the library.
    const std::uint64_t m =
        oracle::TorsionModulus(group.size(), fx.desc.p.get_ui());
    const std::uint64_t target = group.TorsionSize(m);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(600000 + seed);
      try {
        const StructureResult r = MTorsionGenerators(ctx, rng);
        if (r.m == m &&
            group.SubgroupSpan(test::Indices(group, r.generators)) == target) {
          ++successes;
        }
      } catch (const GiveUpError&) {
      }
    }
    const double rate = successes / 100.0;
    if (rate < worst) {
      worst = rate;
      worst_name = name;
    }
    if (rate < 0.95) out.pass = false;
  }
  detail << names.size() << " curves x 100 seeds; lowest success rate "
         << Fixed(100 * worst, 0) << "%";
  if (!worst_name.empty()) detail << " (" << worst_name << ")";
  detail << ", required 95%";
  out.detail = detail.str();
  return out;
}

Outcome StructuralClaims() {
  std::uint64_t curves = 0, violations = 0, count_mismatches = 0;
  auto check = [&](std::uint64_t p, const std::vector<std::uint64_t>& f) {
    std::optional<oracle::EnumeratedGroup> group;
    try {
      group.emplace(oracle::EnumeratedGroup::Enumerate(p, f));
    } catch (const UsageError&) {
      return;  // singular
    }
    ++curves;
    const oracle::ElementaryDivisors s = group->Structure();
    if (s.max_local_rank > 4 || s.rank > 4 || (p - 1) % s.invariants[1] != 0) {
      ++violations;
    }
    if (group->size() != oracle::ZetaGroupOrder(p, f)) ++count_mismatches;
  };
  // Every monic quintic over F_3 and F_5.
  for (std::uint64_t p : {3u, 5u}) {
    std::vector<std::uint64_t> f(6, 0);
    f[5] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < 5; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < 5; ++i, c /= p) f[i] = c % p;
      check(p, f);
    }
  }
  Rng rng(701);
  for (std::uint64_t p : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    for (int i = 0; i < 12; ++i) {
      std::vector<std::uint64_t> f(6, 1);
      for (int j = 0; j < 5; ++j) f[j] = rng.Below(p);
      check(p, f);
    }
  }
  for (const std::string& name : test::TinyCurves()) {
    const Fixture fx = LoadFixture(name);
    std::vector<std::uint64_t> f;
    for (int i = 0; i <= 5; ++i) {
      f.push_back(fx.ctx.curve().f().coeff(i).value().get_ui());
    }
    check(fx.desc.p.get_ui(), f);
  }
  Outcome out;
  out.pass = violations == 0 && count_mismatches == 0;
  out.detail = std::to_string(curves) + " enumerated curves, " +
               std::to_string(violations) + " with rank > 4 or n2 not | p-1, " +
               std::to_string(count_mismatches) + " point-count mismatches";
  return out;
}

Integer SmallestPrimeOneMod(const Integer& lambda) {
  Integer p = lambda + 1;
  while (!IsProbablePrime(p) || p == 2) p += lambda;
  return p;
}

Outcome DiscreteLog() {
  std::uint64_t exhaustive = 0, random = 0, failures = 0;
  for (unsigned long l = 2; l <= 1024; ++l) {
    const Integer lambda(l);
    const FieldRef field = PrimeField::Create(SmallestPrimeOneMod(lambda));
    Rng rng(800 + l);
    const Fp zeta = field->PrimitiveRootOfUnity(lambda, rng);
    const Factorization factors = Factor(lambda);
    Fp target = field->One();
    for (unsigned long a = 0; a < l; ++a) {
      if (PohligHellman({zeta, target, factors}) != a) ++failures;
      target *= zeta;
      ++exhaustive;
    }
  }
  Rng rng(801);
  for (int i = 0; i < 1000; ++i) {
    const Integer lambda = 2 + rng.Below((Integer(1) << 20) - 1);
    const FieldRef field = PrimeField::Create(SmallestPrimeOneMod(lambda));
    const Fp zeta = field->PrimitiveRootOfUnity(lambda, rng);
    const Integer a = rng.Below(lambda);
    if (PohligHellman({zeta, zeta.Pow(a), Factor(lambda)}) != a) ++failures;
    ++random;
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = std::to_string(exhaustive) + " exhaustive (lambda <= 2^10) + " +
               std::to_string(random) + " random (2 <= lambda <= 2^20) " +
               "instances, " + std::to_string(failures) + " failures";
  return out;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
  double seconds;
};

CliRun RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv = {"hyperjac"};
  argv.insert(argv.end(), args.begin(), args.end());
  Timer timer;
  const int code = cli::RunCli(argv, out, err);
  return {code, out.str(), err.str(), timer.Seconds()};
}

Outcome ScalingSmoke() {
  const CliRun run = RunCli({"generators", test::DataPath("p2e64_split.curve"),
                             "--seed", "1", "--json"});
  Outcome out;
  out.pass = run.code == cli::kExitOk && run.seconds < 10;
  out.detail = "p ~ 2^64, exit " + std::to_string(run.code) + ", " +
               Fixed(run.seconds, 3) + " s (limit 10 s)";
  if (run.code != cli::kExitOk) out.detail += "; " + run.err;
  return out;
}

Outcome Determinism() {
  std::uint64_t compared = 0, differing = 0;
  for (const std::string& name :
       {std::string("p2e64_split"), std::string("p19_rank4"),
        std::string("p7_two_primes")}) {
    for (const char* seed : {"0", "7", "20260101"}) {
      const std::vector<std::string> args = {"generators",
                                             test::DataPath(name + ".curve"),
                                             "--seed", seed, "--json"};
      const CliRun a = RunCli(args), b = RunCli(args);
      if (a.code != cli::kExitOk || a.out != b.out || a.out.empty()) {
        ++differing;
      }
      ++compared;
    }
  }
  Outcome out;
  out.pass = differing == 0;
  out.detail = std::to_string(compared) + " report pairs, " +
               std::to_string(differing) + " not byte-identical";
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "Cantor arithmetic agrees with the enumeration oracle",
       CantorArithmetic},
      {"AC2", "pairing bilinear and non-degenerate", PairingBilinearity},
      {"AC3", "pairing invariant under h -> h + lambda r", ClassInvariance},
      {"AC4", "diagonalization certificates are sound", CertificateSoundness},
      {"AC5", "torsion generators span Gamma[m]", TorsionCompleteness},
      {"AC6", "rank <= 4 and n2 | p - 1 on enumerated curves",
       StructuralClaims},
      {"AC7", "Pohlig-Hellman round trips", DiscreteLog},
      {"AC8", "generators on a 64-bit prime within 10 s", ScalingSmoke},
      {"AC9", "byte-identical JSON for identical inputs", Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Timer timer;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << ' '
              << c.title << ": " << outcome.detail
              << " [" + Fixed(timer.Seconds(), 1) + " s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace hyperjac::acceptance

int main() { return hyperjac::acceptance::Main(); }
