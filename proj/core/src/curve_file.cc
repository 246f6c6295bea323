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

#include "hyperjac/curve_file.h"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "hyperjac/error.h"

namespace hyperjac {

namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<Integer> ParseIntegerList(std::string_view text) {
  std::vector<Integer> values;
  if (Trim(text).empty()) return values;
  for (const auto& item : Split(text, ','))
    values.push_back(ParseInteger(item));
  return values;
}

Factorization ParseFactorization(std::string_view text) {
  Factorization factors;
  for (const auto& item : Split(text, ',')) {
    const auto caret = item.find('^');
    PrimePower pp;
    pp.prime = ParseInteger(item.substr(0, caret));
    if (caret == std::string::npos) {
      pp.exponent = 1;
    } else {
      Integer e = ParseInteger(item.substr(caret + 1));
      if (e < 1 || e > 4096) throw ParseError("bad exponent in '" + item + "'");
      pp.exponent = static_cast<unsigned>(e.get_ui());
    }
    factors.push_back(std::move(pp));
  }
  return factors;
}

std::string FormatFactorization(const Factorization& factors) {
  std::string out;
  for (const auto& [q, e] : factors) {
    if (!out.empty()) out += ',';
    out += ToString(q) + '^' + std::to_string(e);
  }
  return out;
}

CurveDescription ParseCurveDescription(std::istream& in) {
  CurveDescription desc;
  bool have_p = false, have_f = false, have_n = false;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string body = Trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected '<key> = <value>'", line_no);
    }
    const std::string key = Trim(std::string_view(body).substr(0, eq));
    const std::string value = Trim(std::string_view(body).substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
    try {
      if (key == "p") {
        desc.p = ParseInteger(value);
        have_p = true;
      } else if (key == "f") {
        desc.f = ParseIntegerList(value);
        have_f = true;
      } else if (key == "N") {
        desc.order = ParseInteger(value);
        have_n = true;
      } else if (key == "N_factors") {
        desc.order_factors = ParseFactorization(value);
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_p) throw ParseError("missing 'p = ...'");
  if (!have_f) throw ParseError("missing 'f = ...'");
  if (!have_n) throw ParseError("missing 'N = ...'");
  if (desc.f.size() != 6 && desc.f.size() != 7) {
    throw ParseError("f needs 6 or 7 coefficients, got " +
                     std::to_string(desc.f.size()));
  }
  return desc;
}

CurveDescription ReadCurveFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file '" + path + "'");
  return ParseCurveDescription(in);
}

std::string FormatCurveDescription(const CurveDescription& desc) {
  std::ostringstream out;
  out << "p = " << ToString(desc.p) << '\n';
  out << "f = ";
  for (std::size_t i = 0; i < desc.f.size(); ++i) {
    out << (i ? "," : "") << ToString(desc.f[i]);
  }
  out << '\n';
  out << "N = " << ToString(desc.order) << '\n';
  if (desc.order_factors) {
    out << "N_factors = " << FormatFactorization(*desc.order_factors) << '\n';
  }
  return out.str();
}

GroupContext MakeGroupContext(const CurveDescription& desc) {
  return GroupContext(Curve::Validate(desc.p, desc.f), desc.order,
                      desc.order_factors);
}

Divisor ParseDivisorLiteral(const Curve& curve, std::string_view text) {
  std::optional<Poly> u, v;
  for (const auto& part : Split(text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw ParseError("divisor literal part '" + part + "' lacks '='");
    }
    const std::string key = Trim(std::string_view(part).substr(0, eq));
    Poly poly(curve.field(),
              ParseIntegerList(std::string_view(part).substr(eq + 1)));
    if (key == "u") {
      u = std::move(poly);
    } else if (key == "v") {
      v = std::move(poly);
    } else {
      throw ParseError("divisor literal key must be u or v, got '" + key + "'");
    }
  }
  if (!u) throw ParseError("divisor literal needs u=...");
  if (!v) v = Poly(curve.field());
  return curve.MakeDivisor(std::move(*u), std::move(*v));
}

std::string FormatDivisorLiteral(const Divisor& d) {
  return "u=" + ToString(d.u()) + ";v=" + ToString(d.v());
}

}  // namespace hyperjac
