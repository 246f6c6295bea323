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
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hyperjac/jacobian.h"

// Brute-force ground truth for tiny primes. Everything here runs on native
// integers with its own polynomial and Cantor code, sharing nothing with the
// main arithmetic beyond the conversion helpers.
namespace hyperjac::oracle {

inline constexpr std::uint64_t kMaxPrime = 64;

// Mumford pair with explicit coefficients: u = x^degree + ..., stored
// lowest first without the leading 1; v has degree < degree.
struct Element {
  int degree = 0;
  std::array<std::uint32_t, 2> u{};
  std::array<std::uint32_t, 2> v{};

  bool operator==(const Element&) const = default;
};

struct ElementaryDivisors {
  // n1 | n2 | n3 | n4
  std::array<std::uint64_t, 4> invariants{};
  // Number of nontrivial invariants.
  int rank = 0;
  // Largest number of cyclic factors at any single prime.
  int max_local_rank = 0;
};

class EnumeratedGroup {
 public:
  // f monic quintic, lowest degree first. Throws UsageError when p exceeds
  // kMaxPrime or the curve is singular.
  static EnumeratedGroup Enumerate(std::uint64_t p,
                                   std::vector<std::uint64_t> f);
  static EnumeratedGroup Enumerate(const Curve& curve);

  std::uint64_t p() const { return p_; }
  const std::vector<std::uint64_t>& f() const { return f_; }
  std::uint64_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t identity() const { return 0; }

  // Throws UsageError for pairs outside the enumeration.
  std::size_t IndexOf(const Element& e) const;

  std::size_t Add(std::size_t a, std::size_t b) const;
  std::size_t Negate(std::size_t a) const;
  std::size_t Multiply(std::uint64_t n, std::size_t a) const;

  // Exact orders, computed once for every element.
  std::uint64_t Order(std::size_t a) const { return orders_.at(a); }

  ElementaryDivisors Structure() const;

  // |<gens>| by breadth-first closure.
  std::uint64_t SubgroupSpan(const std::vector<std::size_t>& gens) const;

  // Number of elements killed by m.
  std::uint64_t TorsionSize(std::uint64_t m) const;

  Element FromDivisor(const Divisor& d) const;
  Divisor ToDivisor(const Curve& curve, std::size_t a) const;
  std::size_t IndexOf(const Divisor& d) const {
    return IndexOf(FromDivisor(d));
  }

 private:
  EnumeratedGroup(std::uint64_t p, std::vector<std::uint64_t> f)
      : p_(p), f_(std::move(f)) {}

  static std::uint32_t Key(const Element& e);
  Element AddElements(const Element& a, const Element& b) const;

  std::uint64_t p_;
  std::vector<std::uint64_t> f_;
  std::vector<Element> elements_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<std::uint64_t> orders_;
};

// |Jac(C)(F_p)| from the point counts of C over F_p and F_{p^2} through the
// L-polynomial, independent of any divisor arithmetic.
std::uint64_t ZetaGroupOrder(std::uint64_t p,
                             const std::vector<std::uint64_t>& f);

// Prime factors of a small integer, increasing.
std::vector<std::pair<std::uint64_t, unsigned>> SmallFactor(std::uint64_t n);

// Largest divisor of n all of whose prime factors divide p - 1.
std::uint64_t TorsionModulus(std::uint64_t n, std::uint64_t p);

}  // namespace hyperjac::oracle
