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

#include "hyperjac/jacobian.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "hyperjac/error.h"

namespace hyperjac {

namespace {

// x^e mod m.
Poly PowX(const Integer& e, const Poly& m) {
  const FieldRef& field = m.field();
  Poly result = Poly::Constant(field->One()) % m;
  Poly base = Poly::X(field) % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = MulMod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = MulMod(result, base, m);
  }
  return result;
}

// (x + a)^e mod m.
Poly PowShiftedX(const Fp& a, const Integer& e, const Poly& m) {
  const FieldRef& field = m.field();
  Poly result = Poly::Constant(field->One()) % m;
  Poly base = (Poly::X(field) + Poly::Constant(a)) % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = MulMod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = MulMod(result, base, m);
  }
  return result;
}

// Cantor-Zassenhaus equal degree splitting of a product of distinct linear
// factors.
void SplitLinear(const Poly& g, Rng& rng, std::vector<Fp>& roots) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  const FieldRef& field = g.field();
  const Integer half = (field->modulus() - 1) / 2;
  while (true) {
    Fp a = field->Random(rng);
    Poly w = PowShiftedX(a, half, g) - Poly::Constant(field->One());
    Poly d = Gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      SplitLinear(d, rng, roots);
      SplitLinear(g / d, rng, roots);
      return;
    }
  }
}

std::vector<Fp> RationalRoots(const Poly& f) {
  const FieldRef& field = f.field();
  Poly xp = PowX(field->modulus(), f.Monic());
  Poly g = Gcd(f, xp - Poly::X(field));
  std::vector<Fp> roots;
  Rng rng(0x726f6f74);
  SplitLinear(g, rng, roots);
  std::sort(roots.begin(), roots.end(),
            [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return roots;
}

// f(x + r) by Horner's rule in the shifted variable.
Poly TaylorShift(const Poly& f, const Fp& r) {
  const FieldRef& field = f.field();
  Poly shifted_x = Poly::X(field) + Poly::Constant(r);
  Poly acc(field);
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * shifted_x + Poly::Constant(f.coeff(i));
  }
  return acc;
}

// Coefficients a_i of a quintic with a_5 = c mapped to a_i c^(4-i).
Poly ScaleToMonic(const Poly& quintic) {
  const FieldRef& field = quintic.field();
  const Fp c = quintic.LeadingCoeff();
  std::vector<Integer> out(6);
  for (int i = 0; i <= 4; ++i) {
    out[i] = (quintic.coeff(i) * c.Pow(4 - i)).value();
  }
  out[5] = 1;
  return Poly(field, std::move(out));
}

// Arithmetic in F_p[x] / (x^2 + m1 x + m0) for an irreducible quadratic.
class QuadraticExtension {
 public:
  struct Element {
    Fp c0;
    Fp c1;
  };

  explicit QuadraticExtension(const Poly& modulus)
      : field_(modulus.field()), m0_(modulus.coeff(0)), m1_(modulus.coeff(1)) {}

  Element Mul(const Element& a, const Element& b) const {
    Fp t = a.c1 * b.c1;
    return {a.c0 * b.c0 - t * m0_, a.c0 * b.c1 + a.c1 * b.c0 - t * m1_};
  }

  Element Pow(Element a, const Integer& e) const {
    Element r{field_->One(), field_->Zero()};
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = Mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = Mul(r, a);
    }
    return r;
  }

  Fp Norm(const Element& a) const {
    return a.c0 * a.c0 - a.c0 * a.c1 * m1_ + a.c1 * a.c1 * m0_;
  }

  static bool IsOne(const Element& a) { return a.c0.IsOne() && a.c1.IsZero(); }

  // Tonelli-Shanks in the multiplicative group of order p^2 - 1.
  std::optional<Element> Sqrt(const Element& a) const {
    if (a.c0.IsZero() && a.c1.IsZero()) return a;
    if (field_->Legendre(Norm(a)) != 1) return std::nullopt;
    const Integer& p = field_->modulus();
    const Integer group_order = p * p - 1;
    const unsigned s = Valuation(group_order, 2);
    const Integer t = group_order >> s;
    Rng local(0x6e6f6e7265736964);
    Element z{field_->Zero(), field_->One()};
    while (field_->Legendre(Norm(z)) != -1) {
      z = {field_->Random(local), field_->Random(local)};
    }
    unsigned m = s;
    Element c = Pow(z, t);
    Element tt = Pow(a, t);
    Element r = Pow(a, (t + 1) / 2);
    while (!IsOne(tt)) {
      unsigned i = 0;
      Element t2 = tt;
      while (!IsOne(t2)) {
        t2 = Mul(t2, t2);
        ++i;
      }
      Element b = c;
      for (unsigned j = 0; j + 1 + i < m; ++j) b = Mul(b, b);
      m = i;
      c = Mul(b, b);
      tt = Mul(tt, c);
      r = Mul(r, b);
    }
    return r;
  }

 private:
  FieldRef field_;
  Fp m0_;
  Fp m1_;
};

// Both square roots of a (one when a = 0, none for non-squares).
std::vector<Fp> SquareRoots(const PrimeField& field, const Fp& a) {
  if (a.IsZero()) return {a};
  auto r = field.Sqrt(a);
  if (!r) return {};
  return {*r, -*r};
}

}  // namespace

Curve Curve::Validate(const Integer& p, const std::vector<Integer>& f_input) {
  FieldRef field;
  try {
    field = PrimeField::Create(p);
  } catch (const UsageError& e) {
    throw InvalidCurveError(e.what());
  }
  Poly input(field, f_input);
  if (input.degree() != 5 && input.degree() != 6) {
    throw InvalidCurveError("f must have degree 5 or 6 modulo p, got degree " +
                            std::to_string(input.degree()));
  }
  if (Gcd(input, input.Derivative()).degree() != 0) {
    throw InvalidCurveError("f has a multiple root; the curve is singular");
  }
  ModelTransform transform;
  transform.input_coeffs = input.coeffs();
  Poly quintic = input;
  if (input.degree() == 6) {
    auto roots = RationalRoots(input);
    if (roots.empty()) {
      throw UnsupportedModelError(
          "sextic f has no rational root; only models with a rational "
          "Weierstrass point are supported");
    }
    const Fp& r = roots.front();
    // F(x + r) = x H(x); the quintic model is the reversal of H.
    Poly h = TaylorShift(input, r) / Poly::X(field);
    std::vector<Integer> reversed(h.coeffs().rbegin(), h.coeffs().rend());
    quintic = Poly(field, std::move(reversed));
    transform.root = r.value();
  }
  transform.scale = quintic.LeadingCoeff().value();
  Poly f = ScaleToMonic(quintic);
  if (f.degree() != 5 || Gcd(f, f.Derivative()).degree() != 0) {
    throw InternalError("model transformation produced a singular quintic");
  }
  return Curve(field, std::move(f), std::move(transform));
}

Divisor Curve::Identity() const {
  return Divisor(Poly::Constant(field_->One()), Poly(field_));
}

bool Curve::IsValid(const Poly& u, const Poly& v) const {
  if (!u.IsMonic() || u.degree() > 2) return false;
  if (v.degree() >= u.degree()) return false;
  return ((v * v - f_) % u).IsZero();
}

Divisor Curve::MakeDivisor(Poly u, Poly v) const {
  if (!IsValid(u, v)) {
    throw UsageError("(u: " + ToString(u) + "; v: " + ToString(v) +
                     ") is not a reduced Mumford divisor on this curve");
  }
  return Divisor(std::move(u), std::move(v));
}

template <bool kTrace>
Divisor Curve::Cantor(const Divisor& a, const Divisor& b,
                      CantorStep* step) const {
  if (a.IsIdentity()) return b;
  if (b.IsIdentity()) return a;
  const Poly& u1 = a.u();
  const Poly& u2 = b.u();
  const Poly& v1 = a.v();
  const Poly& v2 = b.v();

  // Composition.
  XgcdResult first = Xgcd(u1, u2);
  Poly d = first.gcd;
  Poly s1 = first.s, s2 = first.t, s3(field_);
  if (!d.IsOne()) {
    XgcdResult second = Xgcd(d, v1 + v2);
    d = second.gcd;
    s1 = second.s * s1;
    s2 = second.s * s2;
    s3 = second.t;
  }
  Poly u = u1 * u2;
  Poly v = s1 * u1 * v2 + s2 * u2 * v1;
  if (!s3.IsZero()) v += s3 * (v1 * v2 + f_);
  if (!d.IsOne()) {
    u = u / (d * d);
    v = v / d;
    if constexpr (kTrace) step->numerators.push_back({d, Poly(field_)});
  }
  v = v % u;

  // Reduction.
  while (u.degree() > 2) {
    Poly next = (f_ - v * v) / u;
    if constexpr (kTrace) {
      step->numerators.push_back({-v, Poly::Constant(field_->One())});
      step->denominators.push_back(next);
    }
    v = (-v) % next;
    u = std::move(next);
  }
  u = u.Monic();
  v = v % u;
  assert(IsValid(u, v));
  return Divisor(std::move(u), std::move(v));
}

Divisor Curve::Add(const Divisor& a, const Divisor& b) const {
  return Cantor<false>(a, b, nullptr);
}

CantorStep Curve::AddTraced(const Divisor& a, const Divisor& b) const {
  CantorStep step{Identity(), {}, {}};
  step.sum = Cantor<true>(a, b, &step);
  return step;
}

Divisor Curve::Negate(const Divisor& a) const {
  return Divisor(a.u(), (-a.v()) % a.u());
}

Divisor Curve::ScalarMul(const Integer& n, const Divisor& a) const {
  if (n < 0) return ScalarMul(-n, Negate(a));
  Divisor result = Identity();
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = Add(result, result);
    if (mpz_tstbit(n.get_mpz_t(), i)) result = Add(result, a);
  }
  return result;
}

std::vector<Poly> Curve::MumfordLifts(const Poly& u) const {
  const PrimeField& field = *field_;
  std::vector<Poly> lifts;
  if (u.degree() == 0) {
    lifts.emplace_back(field_);
    return lifts;
  }
  if (u.degree() == 1) {
    const Fp a = -u.coeff(0);
    for (const Fp& y : SquareRoots(field, f_.Evaluate(a))) {
      lifts.push_back(Poly::Constant(y));
    }
    return lifts;
  }
  const Fp c0 = u.coeff(0);
  const Fp c1 = u.coeff(1);
  const Fp two = field.Element(2);
  const Fp disc = c1 * c1 - field.Element(4) * c0;
  const int chi = field.Legendre(disc);
  if (chi == 1) {
    const Fp s = *field.Sqrt(disc);
    const Fp a = (-c1 + s) / two;
    const Fp b = (-c1 - s) / two;
    const Fp inv_gap = (b - a).Inverse();
    for (const Fp& ya : SquareRoots(field, f_.Evaluate(a))) {
      for (const Fp& yb : SquareRoots(field, f_.Evaluate(b))) {
        // v(x) = ya + (yb - ya)/(b - a) * (x - a)
        const Fp slope = (yb - ya) * inv_gap;
        lifts.emplace_back(
            field_,
            std::vector<Integer>{(ya - slope * a).value(), slope.value()});
      }
    }
  } else if (chi == 0) {
    const Fp a = -c1 / two;
    const Fp fa = f_.Evaluate(a);
    if (fa.IsZero()) return lifts;
    const Fp fprime = f_.Derivative().Evaluate(a);
    for (const Fp& y : SquareRoots(field, fa)) {
      const Fp slope = fprime / (two * y);
      lifts.emplace_back(
          field_, std::vector<Integer>{(y - slope * a).value(), slope.value()});
    }
  } else {
    const Poly w = f_ % u;
    QuadraticExtension ext(u);
    auto root = ext.Sqrt({w.coeff(0), w.coeff(1)});
    if (!root) return lifts;
    Poly v(field_, std::vector<Integer>{root->c0.value(), root->c1.value()});
    lifts.push_back(v);
    if (!v.IsZero()) lifts.push_back(-v);
  }
  return lifts;
}

Divisor Curve::RandomElement(Rng& rng) const {
  const Integer& p = field_->modulus();
  const Integer total = p * p + p + 1;
  while (true) {
    Integer t = rng.Below(total);
    Poly u(field_);
    if (t == 0) {
      u = Poly::Constant(field_->One());
    } else if (t <= p) {
      u = Poly::Linear(field_->Element(Integer(t - 1)));
    } else {
      t -= p + 1;
      Integer c1, c0;
      mpz_fdiv_qr(c1.get_mpz_t(), c0.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
      u = Poly(field_, std::vector<Integer>{c0, c1, 1});
    }
    // Each Mumford pair is accepted with probability 1/4 per draw.
    std::vector<Poly> lifts = MumfordLifts(u);
    const std::uint64_t pick = rng.Below(std::uint64_t{4});
    if (pick < lifts.size())
      return Divisor(std::move(u), std::move(lifts[pick]));
  }
}

GroupContext::GroupContext(Curve curve, Integer order,
                           std::optional<Factorization> order_factors)
    : curve_(std::move(curve)), order_(std::move(order)) {
  if (order_ < 1) throw GroupOrderError("group order must be positive");
  if (order_factors) {
    for (const auto& [q, e] : *order_factors) {
      if (!IsProbablePrime(q) || e == 0) {
        throw GroupOrderError("N_factors entry " + ToString(q) + "^" +
                              std::to_string(e) + " is not a prime power");
      }
    }
    if (Multiply(*order_factors) != order_) {
      throw GroupOrderError("N_factors does not multiply out to N");
    }
    order_factors_ = *order_factors;
    std::sort(order_factors_.begin(), order_factors_.end(),
              [](const PrimePower& a, const PrimePower& b) {
                return a.prime < b.prime;
              });
  } else {
    if (mpz_sizeinbase(order_.get_mpz_t(), 2) > 64) {
      throw GroupOrderError("N >= 2^64 requires an explicit factorization");
    }
    order_factors_ = Factor(order_);
  }

  // Hasse-Weil: (sqrt(p) -+ 1)^4 = p^2 + 6p + 1 -+ (4p + 4) sqrt(p), with
  // the irrational part rounded toward the interval.
  const Integer& p = curve_.p();
  const Integer t = 4 * p + 4;
  const Integer r = sqrt(Integer(t * t * p));
  const Integer low = p * p + 6 * p + 1 - r;
  const Integer high = p * p + 6 * p + 1 + r;
  if (order_ < low || order_ > high) {
    throw GroupOrderError(
        "N = " + ToString(order_) +
        " violates the Hasse-Weil bound for p = " + ToString(curve_.p()));
  }
  Rng rng(0x6c616772616e6765);
  for (int i = 0; i < 8; ++i) {
    Divisor d = curve_.RandomElement(rng);
    if (!curve_.ScalarMul(order_, d).IsIdentity()) {
      throw GroupOrderError("N = " + ToString(order_) +
                            " does not annihilate the random element " +
                            ToString(d) + "; N is not the group order");
    }
  }
}

Integer GroupContext::ElementOrder(const Divisor& a) const {
  Integer order = order_;
  for (const auto& [q, e] : order_factors_) {
    for (unsigned i = 0; i < e; ++i) {
      if (!curve_.ScalarMul(order / q, a).IsIdentity()) break;
      order /= q;
    }
  }
  return order;
}

Integer GroupContext::SylowElementOrder(const Divisor& a,
                                        const Integer& ell) const {
  const unsigned max_exp = Valuation(order_, ell);
  Integer order = 1;
  Divisor d = a;
  for (unsigned i = 0; i <= max_exp; ++i) {
    if (d.IsIdentity()) return order;
    d = curve_.ScalarMul(ell, d);
    order *= ell;
  }
  throw UsageError("element " + ToString(a) + " is not in the Sylow-" +
                   ToString(ell) + " subgroup");
}

Integer GroupContext::SylowOrder(const Integer& ell) const {
  for (const auto& [q, e] : order_factors_) {
    if (q == ell) return IntPow(q, e);
  }
  throw UsageError(ToString(ell) + " does not divide the group order");
}

Divisor GroupContext::ProjectToSylow(const Divisor& a,
                                     const Integer& ell) const {
  return curve_.ScalarMul(order_ / SylowOrder(ell), a);
}

Divisor GroupContext::SylowComponent(const Divisor& a,
                                     const Integer& ell) const {
  const Integer n_ell = SylowOrder(ell);
  const Integer cofactor = order_ / n_ell;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), n_ell.get_mpz_t());
  return curve_.ScalarMul(Integer((cofactor * inv) % order_), a);
}

std::vector<Integer> GroupContext::TorsionPrimes() const {
  std::vector<Integer> primes;
  const Integer p_minus_one = curve_.p() - 1;
  for (const auto& [q, e] : order_factors_) {
    if (p_minus_one % q == 0) primes.push_back(q);
  }
  return primes;
}

Integer GroupContext::TorsionModulus() const {
  Integer m = 1;
  for (const Integer& q : TorsionPrimes()) m *= SylowOrder(q);
  return m;
}

std::string ToString(const Divisor& d) {
  return "(u: " + ToString(d.u()) + "; v: " + ToString(d.v()) + ")";
}

}  // namespace hyperjac
