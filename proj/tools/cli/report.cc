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

#include "cli/report.h"

#include <nlohmann/json.hpp>
#include <sstream>

#include "hyperjac/error.h"

namespace hyperjac::cli {

namespace {

using Json = nlohmann::ordered_json;

Json Coefficients(const Poly& poly, int count) {
  Json out = Json::array();
  for (int i = 0; i < count; ++i)
    out.push_back(ToString(poly.coeff(i).value()));
  return out;
}

Json DivisorJson(const Divisor& d) {
  Json out;
  out["u"] = Coefficients(d.u(), d.degree() + 1);
  out["v"] = Coefficients(d.v(), std::max(d.degree(), 1));
  return out;
}

Json IntegerArray(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(ToString(v));
  return out;
}

Json CurveJson(const CurveDescription& desc, const GroupContext& ctx) {
  Json out;
  out["p"] = ToString(desc.p);
  out["f"] = IntegerArray(desc.f);
  out["N"] = ToString(desc.order);
  out["N_factors"] = FormatFactorization(ctx.order_factors());
  // Generators are reported in this monic quintic model.
  const Curve& curve = ctx.curve();
  out["model_f"] = Coefficients(curve.f(), 6);
  if (curve.transform().root) {
    out["model_root"] = ToString(*curve.transform().root);
  }
  out["model_scale"] = ToString(curve.transform().scale);
  return out;
}

Json CertificateJson(const SylowResult& sylow) {
  const DiagonalizationState& s = sylow.certificate;
  Json out;
  out["ell"] = ToString(sylow.ell);
  out["sylow_order"] = ToString(sylow.sylow_order);
  out["lambda"] = ToString(s.lambda);
  out["lambda0"] = ToString(s.lambda0);
  out["nu"] = s.nu + 1;
  out["zeta"] = s.zeta ? Json(ToString(s.zeta->value())) : Json(nullptr);
  Json h = Json::array();
  for (const Divisor& d : s.h) h.push_back(DivisorJson(d));
  out["h"] = std::move(h);
  Json alpha = Json::array();
  for (const auto& row : s.alpha) {
    Json r = Json::array();
    for (const auto& entry : row) {
      r.push_back(entry ? Json(ToString(*entry)) : Json(nullptr));
    }
    alpha.push_back(std::move(r));
  }
  out["alpha"] = std::move(alpha);
  out["iterations"] = sylow.iterations;
  out["give_ups"] = sylow.give_ups;
  return out;
}

const Json& Require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("generators file lacks '") + key + "'");
  }
  return obj.at(key);
}

Integer ReadInteger(const Json& value) {
  if (value.is_string()) return ParseInteger(value.get<std::string>());
  if (value.is_number_integer()) {
    return ParseInteger(std::to_string(value.get<long long>()));
  }
  throw ParseError("expected an integer, got " + value.dump());
}

std::vector<Integer> ReadIntegers(const Json& value) {
  if (!value.is_array()) throw ParseError("expected an array of integers");
  std::vector<Integer> out;
  for (const Json& v : value) out.push_back(ReadInteger(v));
  return out;
}

Divisor ReadDivisor(const Curve& curve, const Json& value) {
  Poly u(curve.field(), ReadIntegers(Require(value, "u")));
  Poly v(curve.field(), ReadIntegers(Require(value, "v")));
  return curve.MakeDivisor(std::move(u), std::move(v));
}

}  // namespace

std::string FormatGeneratorsJson(const GeneratorsRun& run) {
  const StructureResult& result = *run.result;
  Json doc;
  doc["curve"] = CurveJson(*run.curve, *run.ctx);
  doc["m"] = ToString(result.m);
  Json gens = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json g = DivisorJson(result.generators[i]);
    g["order"] = ToString(result.orders[i]);
    gens.push_back(std::move(g));
  }
  doc["generators"] = std::move(gens);
  Json cert = Json::array();
  for (const SylowResult& sylow : result.per_prime) {
    cert.push_back(CertificateJson(sylow));
  }
  doc["certificate"] = std::move(cert);
  doc["seed"] = std::to_string(run.seed);
  Json timings;
  timings["orders"] = result.counts.orders;
  timings["scalar_muls"] = result.counts.scalar_muls;
  timings["additions"] = result.counts.additions;
  timings["pairings"] = result.counts.pairings;
  timings["dlogs"] = result.counts.dlogs;
  if (run.wall_seconds) timings["wall_seconds"] = *run.wall_seconds;
  doc["timings"] = std::move(timings);
  return doc.dump(2) + "\n";
}

std::string FormatGeneratorsText(const GeneratorsRun& run) {
  const StructureResult& result = *run.result;
  std::ostringstream out;
  out << "p = " << ToString(run.curve->p) << '\n';
  out << "N = " << ToString(run.curve->order) << " = "
      << FormatFactorization(run.ctx->order_factors()) << '\n';
  if (run.ctx->curve().transform().root) {
    out << "model: y^2 = " << ToString(run.ctx->curve().f())
        << " (coefficients lowest first; generators refer to this model)\n";
  }
  out << "m = " << ToString(result.m) << '\n';
  if (result.per_prime.empty()) {
    out << "no prime of N divides p - 1; every generator is the identity\n";
  }
  for (int i = 0; i < 4; ++i) {
    out << "gamma" << i + 1 << " = " << ToString(result.generators[i])
        << "  order " << ToString(result.orders[i]) << '\n';
  }
  for (const SylowResult& sylow : result.per_prime) {
    out << "ell = " << ToString(sylow.ell) << ": Sylow order "
        << ToString(sylow.sylow_order)
        << ", lambda = " << ToString(sylow.certificate.lambda)
        << ", certificate verified after " << sylow.iterations
        << (sylow.iterations == 1 ? " iteration\n" : " iterations\n");
  }
  out << "seed = " << run.seed << '\n';
  const OperationCounts& c = result.counts;
  out << "operations: orders " << c.orders << ", scalar multiplications "
      << c.scalar_muls << ", additions " << c.additions << ", pairings "
      << c.pairings << ", discrete logarithms " << c.dlogs << '\n';
  if (run.wall_seconds) out << "wall time: " << *run.wall_seconds << " s\n";
  return out.str();
}

GeneratorsFile ParseGeneratorsJson(const Curve& curve,
                                   const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("generators file is not JSON: ") + e.what());
  }
  GeneratorsFile out;
  try {
    const Json& gens = Require(doc, "generators");
    if (!gens.is_array() || gens.size() > 4) {
      throw ParseError("'generators' must be an array of at most 4 divisors");
    }
    for (const Json& g : gens) out.generators.push_back(ReadDivisor(curve, g));
    while (out.generators.size() < 4)
      out.generators.push_back(curve.Identity());
    if (doc.contains("certificate")) {
      for (const Json& entry : doc.at("certificate")) {
        const Integer ell = ReadInteger(Require(entry, "ell"));
        std::vector<Divisor> h;
        for (const Json& d : Require(entry, "h"))
          h.push_back(ReadDivisor(curve, d));
        if (h.size() != 4) throw ParseError("certificate needs 4 probes");
        out.probes.emplace(ell, std::move(h));
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed generators file: ") + e.what());
  }
  return out;
}

}  // namespace hyperjac::cli
