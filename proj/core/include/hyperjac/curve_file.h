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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjac/jacobian.h"

namespace hyperjac {

// Line-oriented curve description:
//
//   p = <decimal integer>
//   f = <c0>,<c1>,...,<c5 or c6>        # lowest degree first
//   N = <decimal integer>               # |Jac(C)(F_p)|
//   N_factors = <q1>^<e1>,<q2>^<e2>     # optional when N < 2^64
//
// '#' starts a comment; blank lines are ignored.
struct CurveDescription {
  Integer p;
  std::vector<Integer> f;
  Integer order;
  std::optional<Factorization> order_factors;
};

// Throws ParseError carrying the offending line number.
CurveDescription ParseCurveDescription(std::istream& in);
CurveDescription ReadCurveFile(const std::string& path);

std::string FormatCurveDescription(const CurveDescription& desc);

// "2^3,5^1"; exponent 1 may be omitted when parsing.
Factorization ParseFactorization(std::string_view text);
std::string FormatFactorization(const Factorization& factors);

std::vector<Integer> ParseIntegerList(std::string_view text);

// Validates the curve and the group order.
GroupContext MakeGroupContext(const CurveDescription& desc);

// "u=c0,c1,c2;v=d0,d1", coefficients lowest degree first with the leading 1
// of u written out. Throws ParseError on syntax, UsageError when the pair is
// not a divisor on the curve.
Divisor ParseDivisorLiteral(const Curve& curve, std::string_view text);
std::string FormatDivisorLiteral(const Divisor& d);

}  // namespace hyperjac
