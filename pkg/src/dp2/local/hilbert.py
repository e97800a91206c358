"""Hilbert symbols over the rationals, with a brute-force solubility
oracle and the product formula as cross-checks."""

from __future__ import annotations

from fractions import Fraction

import sympy

REAL_PLACE = "R"


def _valuation(q: Fraction, p: int) -> int:
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _unit_part_mod(q: Fraction, p: int, modulus: int) -> int:
    """The unit u with q = p^v u, reduced modulo `modulus` (coprime to p)."""
    v = _valuation(q, p)
    num, den = q.numerator, q.denominator
    if v > 0:
        num //= p ** v
    elif v < 0:
        den //= p ** (-v)
    return num * pow(den, -1, modulus) % modulus


def hilbert_symbol(a, b, place) -> int:
    """The Hilbert symbol (a, b)_v, with place a prime or "R"."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol requires nonzero arguments")
    if place == REAL_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if not sympy.isprime(p):
        raise ValueError(f"not a place: {place!r}")
    alpha, beta = _valuation(a, p), _valuation(b, p)
    if p == 2:
        u = _unit_part_mod(a, 2, 8)
        v = _unit_part_mod(b, 2, 8)
        eps_u, eps_v = (u - 1) // 2 % 2, (v - 1) // 2 % 2
        omega_u, omega_v = (u * u - 1) // 8 % 2, (v * v - 1) // 8 % 2
        e = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if e % 2 else 1
    u = _unit_part_mod(a, p, p)
    v = _unit_part_mod(b, p, p)
    e = alpha * beta * ((p - 1) // 2)
    sign = (-1) ** (e % 2)
    if beta % 2:
        sign *= sympy.legendre_symbol(u, p)
    if alpha % 2:
        sign *= sympy.legendre_symbol(v, p)
    return sign


def solubility_oracle(a, b, p: int) -> int:
    """Brute-force check whether z^2 = a x^2 + b y^2 has a primitive
    p-adic solution, by enumeration to Hensel-sufficient depth.
    Returns +1 or -1 in the Hilbert-symbol convention."""
    a, b = Fraction(a), Fraction(b)
    # scale by squares to reach integers
    a = Fraction(a.numerator * a.denominator)
    b = Fraction(b.numerator * b.denominator)
    ai, bi = int(a), int(b)
    k = _valuation(Fraction(4 * ai * bi), p) + (3 if p == 2 else 2)
    mod = p ** k
    squares: dict[int, bool] = {}
    unit_square: dict[int, bool] = {}
    for z in range(mod):
        t = z * z % mod
        squares[t] = True
        if z % p:
            unit_square[t] = True
    for x in range(mod):
        for y in range(mod):
            t = (ai * x * x + bi * y * y) % mod
            if x % p or y % p:
                if t in squares:
                    return 1
            elif t in unit_square:
                return 1
    return -1


def relevant_places(a, b) -> list:
    """The real place, 2, and every odd prime dividing a or b."""
    a, b = Fraction(a), Fraction(b)
    primes = {2}
    for q in (a.numerator, a.denominator, b.numerator, b.denominator):
        primes.update(sympy.factorint(abs(q)))
    return [REAL_PLACE] + sorted(primes)


def product_over_places(a, b) -> int:
    out = 1
    for place in relevant_places(a, b):
        out *= hilbert_symbol(a, b, place)
    return out
