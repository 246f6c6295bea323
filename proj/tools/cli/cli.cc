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

#include "cli/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cli/report.h"
#include "hyperjac/error.h"
#include "hyperjac/oracle.h"

namespace hyperjac::cli {

namespace {

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel LogLevelFromEnv() {
  const char* value = std::getenv("HYPERJAC_LOG");
  if (value == nullptr) return LogLevel::kQuiet;
  const std::string level(value);
  if (level == "debug") return LogLevel::kDebug;
  if (level == "info") return LogLevel::kInfo;
  return LogLevel::kQuiet;
}

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err), level_(LogLevelFromEnv()) {}

  void Info(const std::string& msg) const {
    if (level_ >= LogLevel::kInfo) err_ << "[info] " << msg << '\n';
  }
  void Debug(const std::string& msg) const {
    if (level_ >= LogLevel::kDebug) err_ << "[debug] " << msg << '\n';
  }

 private:
  std::ostream& err_;
  LogLevel level_;
};

// Verification failed; carries the exit message.
class NotCertified : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GeneratorsArgs {
  std::string curve_file;
  std::string seed = std::to_string(kDefaultSeed);
  std::string primes;
  bool json = false;
  bool wall_clock = false;
};

int RunGenerators(const GeneratorsArgs& args, std::ostream& out,
                  const Log& log) {
  const CurveDescription desc = ReadCurveFile(args.curve_file);
  const GroupContext ctx = MakeGroupContext(desc);
  unsigned long long seed = 0;
  if (args.seed == "random") {
    seed = (static_cast<unsigned long long>(std::random_device{}()) << 32) |
           std::random_device{}();
  } else {
    const Integer parsed = ParseInteger(args.seed);
    if (parsed < 0 || !parsed.fits_ulong_p()) {
      throw UsageError("--seed must be a 64-bit unsigned integer or 'random'");
    }
    seed = parsed.get_ui();
  }
  std::vector<Integer> primes = ctx.TorsionPrimes();
  if (!args.primes.empty()) primes = ParseIntegerList(args.primes);
  log.Info("N = " + FormatFactorization(ctx.order_factors()));

  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  const StructureResult result = MTorsionGenerators(ctx, primes, rng);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (const SylowResult& sylow : result.per_prime) {
    log.Debug("ell = " + ToString(sylow.ell) + ": " +
              std::to_string(sylow.iterations) + " iterations, " +
              std::to_string(sylow.give_ups) + " gave up");
  }

  GeneratorsRun run;
  run.curve = &desc;
  run.ctx = &ctx;
  run.result = &result;
  run.seed = seed;
  if (args.wall_clock) run.wall_seconds = seconds;
  out << (args.json ? FormatGeneratorsJson(run) : FormatGeneratorsText(run));
  return kExitOk;
}

struct PairArgs {
  std::string curve_file;
  std::string g;
  std::string h;
  std::string lambda;
  std::string zeta;
};

int RunPair(const PairArgs& args, std::ostream& out) {
  const GroupContext ctx = MakeGroupContext(ReadCurveFile(args.curve_file));
  const Curve& curve = ctx.curve();
  const Divisor g = ParseDivisorLiteral(curve, args.g);
  const Divisor h = ParseDivisorLiteral(curve, args.h);
  const Integer lambda = ParseInteger(args.lambda);
  Rng rng(kDefaultSeed);
  const PairingValue value = TatePairing(ctx).Tame(g, h, lambda, rng);
  out << "tau = " << ToString(value.value) << '\n';
  if (!args.zeta.empty()) {
    const Fp zeta = curve.field()->Element(ParseInteger(args.zeta));
    if (!zeta.Pow(lambda).IsOne() ||
        curve.field()->ElementOrder(zeta, lambda) != lambda) {
      throw UsageError("zeta = " + args.zeta + " is not a primitive " +
                       args.lambda + "-th root of unity");
    }
    out << "log_zeta(tau) = " << ToString(PairingDlogExponent(value, zeta))
        << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string curve_file;
  std::string generators_file;
};

int RunVerify(const VerifyArgs& args, std::ostream& out, const Log& log) {
  const GroupContext ctx = MakeGroupContext(ReadCurveFile(args.curve_file));
  const Curve& curve = ctx.curve();
  const GeneratorsFile file =
      ParseGeneratorsJson(curve, ReadFile(args.generators_file));
  const Integer m = ctx.TorsionModulus();
  Rng rng(kDefaultSeed);

  Integer product = 1;
  for (std::size_t i = 0; i < file.generators.size(); ++i) {
    const Divisor& gen = file.generators[i];
    if (!ctx.ScalarMul(m, gen).IsIdentity()) {
      throw NotCertified("gamma" + std::to_string(i + 1) +
                         " is not killed by m = " + ToString(m));
    }
    product *= ctx.ElementOrder(gen);
  }

  for (const Integer& ell : ctx.TorsionPrimes()) {
    std::vector<Divisor> components;
    for (const Divisor& gen : file.generators) {
      components.push_back(ctx.SylowComponent(gen, ell));
    }
    CertificateCheck check;
    auto probes = file.probes.find(ell);
    if (probes != file.probes.end()) {
      DiagonalizationState state;
      state.ell = ell;
      state.gamma = components;
      state.h = probes->second;
      check = VerifyDirectSum(state, ctx, rng);
      log.Debug("ell = " + ToString(ell) + ": pairing certificate checked");
    } else {
      check = CertifyIndependence(ell, components, ctx, rng);
      log.Debug("ell = " + ToString(ell) + ": independence checked by rank");
    }
    if (!check) {
      throw NotCertified("ell = " + ToString(ell) + ": " + check.reason);
    }
  }
  if (product != m) {
    throw NotCertified("product of generator orders " + ToString(product) +
                       " differs from |Gamma[m]| = " + ToString(m));
  }
  if (curve.p() <= oracle::kMaxPrime) {
    const auto group = oracle::EnumeratedGroup::Enumerate(curve);
    std::vector<std::size_t> idx;
    for (const Divisor& gen : file.generators)
      idx.push_back(group.IndexOf(gen));
    const std::uint64_t span = group.SubgroupSpan(idx);
    const std::uint64_t torsion = group.TorsionSize(m.get_ui());
    if (span != torsion) {
      throw NotCertified("generators span " + std::to_string(span) +
                         " elements; Gamma[m] has " + std::to_string(torsion));
    }
    out << "oracle: span " << span << " = |Gamma[m]|\n";
  }
  out << "certified: Gamma[m] is the direct sum of the generators, m = "
      << ToString(m) << '\n';
  return kExitOk;
}

struct EnumerateArgs {
  std::string p;
  std::string f;
};

int RunEnumerate(const EnumerateArgs& args, std::ostream& out) {
  const Integer p = ParseInteger(args.p);
  if (p < 3 || p > oracle::kMaxPrime) {
    throw UsageError("enumeration needs an odd prime p <= " +
                     std::to_string(oracle::kMaxPrime));
  }
  const std::vector<Integer> f = ParseIntegerList(args.f);
  // Rejects singular input with the library's diagnostics.
  const Curve curve = Curve::Validate(p, f);
  if (f.size() != 6 || Integer(f[5] % p) != 1) {
    throw UsageError("enumeration takes a monic quintic");
  }
  std::vector<std::uint64_t> coeffs;
  for (const Integer& c : f) {
    Integer r = c % p;
    if (r < 0) r += p;
    coeffs.push_back(r.get_ui());
  }
  const auto group = oracle::EnumeratedGroup::Enumerate(p.get_ui(), coeffs);
  const std::uint64_t zeta = oracle::ZetaGroupOrder(p.get_ui(), coeffs);
  if (zeta != group.size()) {
    throw InternalError("enumeration found " + std::to_string(group.size()) +
                        " elements but point counts give " +
                        std::to_string(zeta));
  }
  const auto structure = group.Structure();
  CurveDescription desc;
  desc.p = p;
  for (std::uint64_t c : coeffs)
    desc.f.emplace_back(static_cast<unsigned long>(c));
  desc.order = static_cast<unsigned long>(group.size());
  desc.order_factors = Factor(desc.order);
  out << "# enumerated: " << group.size() << " elements, invariants "
      << structure.invariants[0] << "," << structure.invariants[1] << ","
      << structure.invariants[2] << "," << structure.invariants[3]
      << ", m = " << oracle::TorsionModulus(group.size(), p.get_ui()) << '\n';
  out << FormatCurveDescription(desc);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Generators of the m-torsion of genus-2 Jacobians over F_p",
               "hyperjac"};
  app.require_subcommand(1);

  GeneratorsArgs gen_args;
  auto* gen = app.add_subcommand("generators",
                                 "Compute independent generators of Gamma[m]");
  gen->add_option("curve-file", gen_args.curve_file, "Curve description")
      ->required();
  gen->add_option("--seed", gen_args.seed,
                  "Random seed, or 'random' for a fresh one")
      ->capture_default_str();
  gen->add_option("--primes", gen_args.primes,
                  "Comma-separated primes of gcd(N, p - 1) to use");
  gen->add_flag("--json", gen_args.json, "Emit the JSON report");
  gen->add_flag("--wall-clock", gen_args.wall_clock,
                "Include wall-clock time in the report");

  PairArgs pair_args;
  auto* pair = app.add_subcommand("pair", "Evaluate the tame Tate pairing");
  pair->set_help_flag("--help", "Print this help message and exit");
  pair->add_option("curve-file", pair_args.curve_file, "Curve description")
      ->required();
  pair->add_option("--g", pair_args.g, "Divisor literal u=c0,..;v=d0,..")
      ->required();
  pair->add_option("--h", pair_args.h, "Divisor literal u=c0,..;v=d0,..")
      ->required();
  pair->add_option("--lambda", pair_args.lambda, "Pairing order")->required();
  pair->add_option("--zeta", pair_args.zeta,
                   "Primitive lambda-th root of unity for the logarithm");

  VerifyArgs verify_args;
  auto* verify =
      app.add_subcommand("verify", "Re-check a generators report from scratch");
  verify->add_option("curve-file", verify_args.curve_file, "Curve description")
      ->required();
  verify
      ->add_option("generators-file", verify_args.generators_file,
                   "JSON report of 'generators --json'")
      ->required();

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand(
      "enumerate",
      "Write a curve file with the group order found by brute force");
  enumerate->add_option("--p", enum_args.p, "Odd prime <= 64")->required();
  enumerate->add_option("--f", enum_args.f, "c0,...,c4,1 lowest first")
      ->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const Log log(err);
  try {
    if (*gen) return RunGenerators(gen_args, out, log);
    if (*pair) return RunPair(pair_args, out);
    if (*verify) return RunVerify(verify_args, out, log);
    if (*enumerate) return RunEnumerate(enum_args, out);
  } catch (const NotCertified& e) {
    err << "not certified: " << e.what() << '\n';
    return kExitNotCertified;
  } catch (const GiveUpError& e) {
    err << "gave up: " << e.what() << '\n';
    return kExitGiveUp;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace hyperjac::cli
