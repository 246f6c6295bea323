#!/usr/bin/env python3
# Copyright 2026 The Hyperjac Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes a curve file for a large genus-2 curve with known group order.

The curve is y^2 = g(x^2) with g(t) = (t - s^2)(t^2 + a t + b). Its Jacobian
is isogenous to E1 x E2 with E1: Y^2 = g(T) and E2: Y^2 = T^3 g(1/T), so
|Jac| = |E1| |E2|. Elliptic point counts use baby-step giant-step on the
Hasse interval; p is chosen with p - 1 smooth so that many primes of the
group order divide p - 1.

Usage: make_split_curve.py [--seed S] [--bits B] > curve.txt
"""

import argparse
import math
import random
import sys

import sympy


def ec_add(P, Q, a, p):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def ec_neg(P, p):
    return None if P is None else (P[0], (-P[1]) % p)


def ec_mul(n, P, a, p):
    if n < 0:
        return ec_mul(-n, ec_neg(P, p), a, p)
    R = None
    while n:
        if n & 1:
            R = ec_add(R, P, a, p)
        P = ec_add(P, P, a, p)
        n >>= 1
    return R


def short_weierstrass(c, p):
    """Y^2 = c3 T^3 + c2 T^2 + c1 T + c0 as Y^2 = X^3 + A X + B."""
    c0, c1, c2, c3 = (x % p for x in c)
    # Monic: X = c3 T, Y' = c3 Y.
    b2, b1, b0 = c2, c1 * c3 % p, c0 * c3 * c3 % p
    # Depress: X = Z - b2/3.
    s = b2 * pow(3, -1, p) % p
    A = (b1 - 3 * s * s) % p
    B = (2 * s ** 3 - b1 * s + b0) % p
    return A, B


def random_point(A, B, p, rng):
    while True:
        x = rng.randrange(p)
        rhs = (x ** 3 + A * x + B) % p
        if rhs == 0:
            continue
        if pow(rhs, (p - 1) // 2, p) != 1:
            continue
        return (x, int(sympy.sqrt_mod(rhs, p)))


def point_order(P, multiple, A, p):
    order = multiple
    for q in sympy.factorint(multiple):
        while order % q == 0 and ec_mul(order // q, P, A, p) is None:
            order //= q
    return order


def count_points(A, B, p, rng):
    width = 4 * math.isqrt(p) + 4
    lo = p + 1 - width // 2
    m = math.isqrt(width) + 1
    while True:
        P = random_point(A, B, p, rng)
        baby = {}
        R = None
        for j in range(m + 1):
            baby.setdefault(R, j)
            R = ec_add(R, P, A, p)
        # n = lo + i m + j with (lo + i m) P = -j P.
        step = ec_mul(m, P, A, p)
        Q = ec_mul(lo, P, A, p)
        hits = []
        for i in range(m + 1):
            j = baby.get(ec_neg(Q, p))
            if j is not None:
                hits.append(lo + i * m + j)
            Q = ec_add(Q, step, A, p)
        candidates = sorted(set(n for n in hits if abs(p + 1 - n) <= 2 * math.isqrt(p) + 1))
        if not candidates:
            continue
        order = point_order(P, candidates[0], A, p)
        if order > 4 * math.isqrt(p) + 2:
            exact = [n for n in candidates if n % order == 0]
            if len(exact) == 1:
                return exact[0]


def smooth_prime(bits, rng):
    """Prime p with 2^bits < p < 2^(bits + 1) and p - 1 smooth."""
    small = list(sympy.primerange(3, 200))
    while True:
        n = 2 ** rng.randrange(1, 6)
        while n.bit_length() <= bits:
            n *= rng.choice(small)
        if n.bit_length() != bits + 1:
            continue
        if sympy.isprime(n + 1):
            return n + 1


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20261018)
    parser.add_argument("--bits", type=int, default=64)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    p = smooth_prime(args.bits, rng)
    t = sympy.symbols("t")
    x = sympy.symbols("x")
    while True:
        s = rng.randrange(1, p)
        a = rng.randrange(p)
        b = rng.randrange(1, p)
        g = sympy.Poly((t - s * s) * (t * t + a * t + b), t, modulus=p)
        if sympy.degree(sympy.gcd(g, g.diff(t))) > 0:
            continue
        f = sympy.Poly(g.as_expr().subs(t, x * x), x, modulus=p)
        if sympy.degree(sympy.gcd(f, f.diff(x))) > 0:
            continue
        gc = [int(c) % p for c in reversed(g.all_coeffs())]  # c0..c3
        n1 = count_points(*short_weierstrass(gc, p), p, rng)
        n2 = count_points(*short_weierstrass(list(reversed(gc)), p), p, rng)
        order = n1 * n2
        shared = math.gcd(order, p - 1)
        if len(sympy.factorint(shared)) < 2:
            continue
        break
    factors = sympy.factorint(order)
    fc = [int(c) % p for c in reversed(f.all_coeffs())]
    out = sys.stdout
    out.write("# y^2 = g(x^2), g(t) = (t - s^2)(t^2 + a t + b)\n")
    out.write(f"# s = {s}, a = {a}, b = {b}\n")
    out.write(f"# |E1| = {n1}, |E2| = {n2}\n")
    out.write(f"p = {p}\n")
    out.write("f = " + ",".join(str(c) for c in fc) + "\n")
    out.write(f"N = {order}\n")
    out.write("N_factors = " + ",".join(
        f"{q}^{e}" for q, e in sorted(factors.items())) + "\n")


if __name__ == "__main__":
    main()
