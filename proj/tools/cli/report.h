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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperjac/curve_file.h"
#include "hyperjac/structure.h"

namespace hyperjac::cli {

struct GeneratorsRun {
  const CurveDescription* curve = nullptr;
  const GroupContext* ctx = nullptr;
  const StructureResult* result = nullptr;
  unsigned long long seed = 0;
  std::optional<double> wall_seconds;
};

// JSON report with keys curve, m, generators, certificate, seed, timings.
// Integers are decimal strings so that any size round-trips.
std::string FormatGeneratorsJson(const GeneratorsRun& run);

std::string FormatGeneratorsText(const GeneratorsRun& run);

// The parts of a JSON report that verification consumes.
struct GeneratorsFile {
  std::vector<Divisor> generators;
  // Probe elements per prime, when the report carries a certificate.
  std::map<Integer, std::vector<Divisor>> probes;
};

// Throws ParseError on malformed JSON and UsageError when a divisor is not
// on the curve.
GeneratorsFile ParseGeneratorsJson(const Curve& curve, const std::string& text);

}  // namespace hyperjac::cli
