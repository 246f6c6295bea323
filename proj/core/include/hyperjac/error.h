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

#include <stdexcept>
#include <string>

namespace hyperjac {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// The curve equation is singular or otherwise malformed.
class InvalidCurveError : public Error {
 public:
  using Error::Error;
};

// A sextic model without a rational Weierstrass point.
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

// The supplied group order is inconsistent with the curve.
class GroupOrderError : public Error {
 public:
  using Error::Error;
};

class NotInSubgroupError : public Error {
 public:
  using Error::Error;
};

// A randomized procedure exhausted its retry budget.
class GiveUpError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. line() is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Should be unreachable; signals a logic bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperjac
