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

#include "hyperjac/oracle.h"

#include <algorithm>
#include <deque>
#include <map>

#include "hyperjac/error.h"

namespace hyperjac::oracle {

namespace {

using SmallPoly = std::vector<std::int64_t>;

// Polynomial arithmetic modulo a small prime, written independently of
// hyperjac::Poly. Coefficients live in [0, p), trailing zeros stripped.
class SmallRing {
 public:
  explicit SmallRing(std::int64_t p) : p_(p) {}

  std::int64_t Mod(std::int64_t a) const { return ((a % p_) + p_) % p_; }

  std::int64_t Inv(std::int64_t a) const {
    a = Mod(a);
    if (a == 0) throw InternalError("oracle: inverse of zero");
    std::int64_t r = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return r;
  }

  SmallPoly& Trim(SmallPoly& a) const {
    for (auto& c : a) c = Mod(c);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  static int Deg(const SmallPoly& a) { return static_cast<int>(a.size()) - 1; }

  SmallPoly Add(SmallPoly a, const SmallPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return Trim(a);
  }

  SmallPoly Neg(SmallPoly a) const {
    for (auto& c : a) c = -c;
    return Trim(a);
  }

  SmallPoly Sub(const SmallPoly& a, const SmallPoly& b) const {
    return Add(a, Neg(b));
  }

  SmallPoly Mul(const SmallPoly& a, const SmallPoly& b) const {
    if (a.empty() || b.empty()) return {};
    SmallPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
      }
    }
    return Trim(r);
  }

  SmallPoly Scale(SmallPoly a, std::int64_t c) const {
    for (auto& x : a) x = x * Mod(c) % p_;
    return Trim(a);
  }

  std::pair<SmallPoly, SmallPoly> DivMod(SmallPoly a,
                                         const SmallPoly& b) const {
    if (b.empty()) throw InternalError("oracle: division by zero polynomial");
    SmallPoly q;
    const int db = Deg(b);
    const std::int64_t lead_inv = Inv(b.back());
    if (Deg(a) >= db) q.assign(a.size() - b.size() + 1, 0);
    while (Deg(a) >= db) {
      const int shift = Deg(a) - db;
      const std::int64_t c = a.back() * lead_inv % p_;
      q[shift] = c;
      for (int j = 0; j <= db; ++j) {
        a[shift + j] = Mod(a[shift + j] - c * b[j]);
      }
      Trim(a);
    }
    return {Trim(q), a};
  }

  SmallPoly Rem(const SmallPoly& a, const SmallPoly& b) const {
    return DivMod(a, b).second;
  }

  SmallPoly Quo(const SmallPoly& a, const SmallPoly& b) const {
    auto [q, r] = DivMod(a, b);
    if (!r.empty()) throw InternalError("oracle: inexact division");
    return q;
  }

  SmallPoly Monic(const SmallPoly& a) const {
    return a.empty() ? a : Scale(a, Inv(a.back()));
  }

  // s with s*a = 1 mod m, for a coprime to m.
  SmallPoly InvMod(const SmallPoly& a, const SmallPoly& m) const {
    SmallPoly r0 = m, r1 = Rem(a, m), s0 = {}, s1 = {1};
    while (!r1.empty()) {
      auto [q, r] = DivMod(r0, r1);
      SmallPoly s = Sub(s0, Mul(q, s1));
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s;
    }
    if (Deg(r0) != 0) throw InternalError("oracle: not invertible");
    return Rem(Scale(s0, Inv(r0[0])), m);
  }

  SmallPoly Pow(const SmallPoly& a, int e) const {
    SmallPoly r = {1};
    for (int i = 0; i < e; ++i) r = Mul(r, a);
    return r;
  }

  std::int64_t Eval(const SmallPoly& a, std::int64_t x) const {
    std::int64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p_;
    return acc;
  }

 private:
  std::int64_t p_;
};

// One irreducible factor of u with the residue of v and a multiplicity.
struct Place {
  SmallPoly pi;
  SmallPoly residue;
  int multiplicity;
};

}  // namespace

std::uint32_t EnumeratedGroup::Key(const Element& e) {
  return static_cast<std::uint32_t>(e.degree) << 24 | e.u[0] << 18 |
         e.u[1] << 12 | e.v[0] << 6 | e.v[1];
}

EnumeratedGroup EnumeratedGroup::Enumerate(std::uint64_t p,
                                           std::vector<std::uint64_t> f) {
  if (p > kMaxPrime) {
    throw UsageError("oracle enumeration is capped at p <= " +
                     std::to_string(kMaxPrime));
  }
  if (p < 3 || !IsProbablePrime(Integer(static_cast<unsigned long>(p)))) {
    throw UsageError("oracle needs an odd prime");
  }
  f.resize(6, 0);
  for (auto& c : f) c %= p;
  if (f[5] != 1) throw UsageError("oracle needs a monic quintic");
  EnumeratedGroup group(p, f);
  const SmallRing ring(static_cast<std::int64_t>(p));
  SmallPoly fp(f.begin(), f.end());
  ring.Trim(fp);
  SmallPoly a = fp, b;
  for (std::size_t i = 1; i < fp.size(); ++i) {
    b.push_back(fp[i] * static_cast<std::int64_t>(i));
  }
  ring.Trim(b);
  while (!b.empty()) {
    SmallPoly r = ring.Rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (SmallRing::Deg(a) > 0) throw UsageError("oracle needs a squarefree f");

  // Identity, then every (u, v) with u | v^2 - f, by exhaustion.
  group.elements_.push_back(Element{});
  const std::uint32_t q = static_cast<std::uint32_t>(p);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if ((b * b) % q == ring.Eval(fp, a)) {
        group.elements_.push_back(Element{1, {(q - a) % q, 0}, {b, 0}});
      }
    }
  }
  for (std::uint32_t c0 = 0; c0 < q; ++c0) {
    for (std::uint32_t c1 = 0; c1 < q; ++c1) {
      const SmallPoly u = {c0, c1, 1};
      for (std::uint32_t d0 = 0; d0 < q; ++d0) {
        for (std::uint32_t d1 = 0; d1 < q; ++d1) {
          SmallPoly v = {d0, d1};
          ring.Trim(v);
          if (ring.Rem(ring.Sub(ring.Mul(v, v), fp), u).empty()) {
            group.elements_.push_back(Element{2, {c0, c1}, {d0, d1}});
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    group.index_.emplace(Key(group.elements_[i]), i);
  }

  // Orders by exponent stripping against the enumerated group size.
  const auto factors = SmallFactor(group.size());
  group.orders_.resize(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    std::uint64_t order = group.size();
    for (const auto& [prime, e] : factors) {
      for (unsigned k = 0; k < e; ++k) {
        if (group.Multiply(order / prime, i) != 0) break;
        order /= prime;
      }
    }
    group.orders_[i] = order;
  }
  return group;
}

EnumeratedGroup EnumeratedGroup::Enumerate(const Curve& curve) {
  if (curve.p() > kMaxPrime) {
    throw UsageError("oracle enumeration is capped at p <= " +
                     std::to_string(kMaxPrime));
  }
  std::vector<std::uint64_t> f;
  for (int i = 0; i <= 5; ++i) f.push_back(curve.f().coeff(i).value().get_ui());
  return Enumerate(curve.p().get_ui(), std::move(f));
}

std::size_t EnumeratedGroup::IndexOf(const Element& e) const {
  auto it = index_.find(Key(e));
  if (it == index_.end() || !(elements_[it->second] == e)) {
    throw UsageError("element is not in the enumerated group");
  }
  return it->second;
}

// Addition through the places of the two divisors: matching places merge
// (same point) or cancel (opposite points), the merged divisor is rebuilt by
// Hensel lifting and CRT, then reduced.
Element EnumeratedGroup::AddElements(const Element& a, const Element& b) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  const SmallRing ring(p);
  SmallPoly f(f_.begin(), f_.end());
  ring.Trim(f);

  auto places_of = [&](const Element& e) {
    std::vector<Place> places;
    if (e.degree == 0) return places;
    SmallPoly u = {e.u[0], e.u[1]};
    u.resize(e.degree);
    u.push_back(1);
    SmallPoly v = {e.v[0], e.v[1]};
    ring.Trim(v);
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < p; ++x) {
      if (ring.Eval(u, x) == 0) roots.push_back(x);
    }
    if (roots.empty()) {
      places.push_back({u, ring.Rem(v, u), 1});
      return places;
    }
    for (std::int64_t x : roots) {
      SmallPoly pi = {ring.Mod(-x), 1};
      int mult = (e.degree == 2 && roots.size() == 1) ? 2 : 1;
      places.push_back({pi, ring.Rem(v, pi), mult});
    }
    return places;
  };

  std::vector<Place> merged = places_of(a);
  for (const Place& q : places_of(b)) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Place& m) { return m.pi == q.pi; });
    if (it == merged.end()) {
      merged.push_back(q);
      continue;
    }
    const bool weierstrass = it->residue.empty();
    if (weierstrass) {
      // 2W is principal.
      it->multiplicity = (it->multiplicity + q.multiplicity) % 2;
    } else if (it->residue == q.residue) {
      it->multiplicity += q.multiplicity;
    } else {
      const int diff = it->multiplicity - q.multiplicity;
      if (diff >= 0) {
        it->multiplicity = diff;
      } else {
        *it = q;
        it->multiplicity = -diff;
      }
    }
  }

  // Rebuild (u, v) with v^2 = f mod u.
  SmallPoly u = {1};
  SmallPoly v = {};
  for (const Place& place : merged) {
    if (place.multiplicity == 0) continue;
    const SmallPoly modulus = ring.Pow(place.pi, place.multiplicity);
    SmallPoly w = place.residue;
    for (int k = 1; k < place.multiplicity; ++k) {
      // Newton step for w^2 = f.
      SmallPoly err = ring.Rem(ring.Sub(f, ring.Mul(w, w)), modulus);
      SmallPoly inv = ring.InvMod(ring.Scale(w, 2), modulus);
      w = ring.Rem(ring.Add(w, ring.Mul(err, inv)), modulus);
    }
    // CRT: v = v mod u, v = w mod modulus.
    SmallPoly t = ring.Mul(ring.Sub(w, v), ring.InvMod(u, modulus));
    v = ring.Add(v, ring.Mul(u, ring.Rem(t, modulus)));
    u = ring.Mul(u, modulus);
    v = ring.Rem(v, u);
  }

  while (SmallRing::Deg(u) > 2) {
    SmallPoly next = ring.Quo(ring.Sub(f, ring.Mul(v, v)), u);
    v = ring.Rem(ring.Neg(v), next);
    u = next;
  }
  u = ring.Monic(u);
  v = ring.Rem(v, u);

  Element out;
  out.degree = SmallRing::Deg(u);
  for (int i = 0; i < out.degree; ++i) {
    out.u[i] = static_cast<std::uint32_t>(u[i]);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.v[i] = static_cast<std::uint32_t>(v[i]);
  }
  return out;
}

std::size_t EnumeratedGroup::Add(std::size_t a, std::size_t b) const {
  return IndexOf(AddElements(elements_.at(a), elements_.at(b)));
}

std::size_t EnumeratedGroup::Negate(std::size_t a) const {
  Element e = elements_.at(a);
  const std::uint32_t q = static_cast<std::uint32_t>(p_);
  for (auto& c : e.v) c = (q - c) % q;
  return IndexOf(e);
}

std::size_t EnumeratedGroup::Multiply(std::uint64_t n, std::size_t a) const {
  std::size_t result = identity();
  std::size_t base = a;
  while (n > 0) {
    if (n & 1) result = Add(result, base);
    base = Add(base, base);
    n >>= 1;
  }
  return result;
}

ElementaryDivisors EnumeratedGroup::Structure() const {
  ElementaryDivisors out;
  out.invariants.fill(1);
  const auto factors = SmallFactor(size());
  for (const auto& [prime, e] : factors) {
    // |G[prime^k]| for k = 0..e gives the number of cyclic factors of order
    // at least prime^k at this prime.
    std::vector<std::uint64_t> counts(e + 1, 0);
    for (std::uint64_t order : orders_) {
      std::uint64_t pk = 1;
      for (unsigned k = 0; k <= e; ++k) {
        if (pk % order == 0) ++counts[k];
        pk *= prime;
      }
    }
    std::vector<int> at_least(e + 1, 0);
    for (unsigned k = 1; k <= e; ++k) {
      std::uint64_t ratio = counts[k] / counts[k - 1];
      int r = 0;
      while (ratio > 1) {
        ratio /= prime;
        ++r;
      }
      at_least[k] = r;
    }
    out.max_local_rank = std::max(out.max_local_rank, at_least[1]);
    // The i-th largest cyclic factor has exponent #{k : at_least[k] > i}.
    const int slots = std::max(4, at_least[1]);
    std::vector<unsigned> exps(slots, 0);
    for (int i = 0; i < slots; ++i) {
      for (unsigned k = 1; k <= e; ++k) {
        if (at_least[k] > i) ++exps[i];
      }
    }
    // Largest exponents go to n4, n3, ...; anything past four slots makes
    // the rank exceed four and is reported through max_local_rank.
    for (int i = 0; i < 4; ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) out.invariants[3 - i] *= prime;
    }
  }
  out.rank = static_cast<int>(
      std::count_if(out.invariants.begin(), out.invariants.end(),
                    [](std::uint64_t n) { return n > 1; }));
  return out;
}

std::uint64_t EnumeratedGroup::SubgroupSpan(
    const std::vector<std::size_t>& gens) const {
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue = {identity()};
  seen[identity()] = true;
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g : gens) {
      const std::size_t y = Add(x, g);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count;
}

std::uint64_t EnumeratedGroup::TorsionSize(std::uint64_t m) const {
  return static_cast<std::uint64_t>(
      std::count_if(orders_.begin(), orders_.end(),
                    [m](std::uint64_t order) { return m % order == 0; }));
}

Element EnumeratedGroup::FromDivisor(const Divisor& d) const {
  Element e;
  e.degree = d.degree();
  for (int i = 0; i < e.degree; ++i) {
    e.u[i] = static_cast<std::uint32_t>(d.u().coeff(i).value().get_ui());
  }
  for (int i = 0; i < std::max(0, d.v().degree() + 1); ++i) {
    e.v[i] = static_cast<std::uint32_t>(d.v().coeff(i).value().get_ui());
  }
  return e;
}

Divisor EnumeratedGroup::ToDivisor(const Curve& curve, std::size_t a) const {
  const Element& e = elements_.at(a);
  std::vector<Integer> u, v;
  for (int i = 0; i < e.degree; ++i) u.emplace_back(e.u[i]);
  u.emplace_back(1);
  for (int i = 0; i < 2; ++i) v.emplace_back(e.v[i]);
  return curve.MakeDivisor(Poly(curve.field(), u), Poly(curve.field(), v));
}

std::uint64_t ZetaGroupOrder(std::uint64_t p,
                             const std::vector<std::uint64_t>& f) {
  const std::int64_t q = static_cast<std::int64_t>(p);
  const SmallRing ring(q);
  auto legendre = [&](std::int64_t a) -> int {
    a = ring.Mod(a);
    if (a == 0) return 0;
    std::int64_t r = 1, base = a, e = (q - 1) / 2;
    while (e > 0) {
      if (e & 1) r = r * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return r == 1 ? 1 : -1;
  };
  // One point at infinity for an odd-degree model.
  std::int64_t n1 = 1;
  for (std::int64_t x = 0; x < q; ++x) {
    std::int64_t fx = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
      fx = (fx * x + static_cast<std::int64_t>(f[i])) % q;
    }
    n1 += 1 + legendre(fx);
  }
  // F_{p^2} = F_p(s), s^2 = nr; squares detected through the norm.
  std::int64_t nr = 2;
  while (legendre(nr) != -1) ++nr;
  std::int64_t n2 = 1;
  for (std::int64_t x0 = 0; x0 < q; ++x0) {
    for (std::int64_t x1 = 0; x1 < q; ++x1) {
      std::int64_t a = 0, b = 0;  // f(x0 + x1 s) = a + b s
      for (std::size_t i = f.size(); i-- > 0;) {
        const std::int64_t na = (a * x0 + b * x1 % q * nr) % q;
        const std::int64_t nb = (a * x1 + b * x0) % q;
        a = (na + static_cast<std::int64_t>(f[i])) % q;
        b = nb;
      }
      const std::int64_t norm = ring.Mod(a * a - nr * (b * b % q));
      if (a == 0 && b == 0) {
        n2 += 1;
      } else {
        n2 += 1 + legendre(norm);
      }
    }
  }
  // L(T) = prod(1 - alpha_i T); #J = L(1).
  const std::int64_t s1 = q + 1 - n1;
  const std::int64_t s2 = q * q + 1 - n2;
  const std::int64_t e2 = (s1 * s1 - s2) / 2;
  const std::int64_t order = 1 - s1 + e2 - q * s1 + q * q;
  return static_cast<std::uint64_t>(order);
}

std::vector<std::pair<std::uint64_t, unsigned>> SmallFactor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t TorsionModulus(std::uint64_t n, std::uint64_t p) {
  std::uint64_t m = 1;
  for (const auto& [q, e] : SmallFactor(n)) {
    if ((p - 1) % q != 0) continue;
    for (unsigned k = 0; k < e; ++k) m *= q;
  }
  return m;
}

}  // namespace hyperjac::oracle
