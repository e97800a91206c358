"""Local invariant profiles and the global verdict rule."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import sympy


@dataclass(frozen=True)
class LocalProfile:
    """Attained invariant vectors of the analyzed classes at one place.

    invariants holds tuples in Q/Z (one entry per class); method is
    "exact-enumeration", "analytic" (a machine-checked valuation
    argument), "sampling", or "good-reduction"."""

    place: object  # prime or "R"
    modulus: int | None
    invariants: frozenset
    undetermined: int
    method: str

    @property
    def exact(self) -> bool:
        return self.method in ("exact-enumeration", "analytic",
                               "good-reduction") and self.undetermined == 0


@dataclass(frozen=True)
class Verdict:
    profiles: tuple
    conclusion: str  # obstructed | not_obstructed_by_class | inconclusive


def render_place(place) -> str:
    return "R" if place == "R" else f"Q_{place}"


def good_reduction_profile(p: int, n_classes: int) -> LocalProfile:
    """The assumed profile {0} at a place of good reduction."""
    zero = tuple(Fraction(0) for _ in range(n_classes))
    return LocalProfile(place=p, modulus=None,
                        invariants=frozenset({zero}),
                        undetermined=0, method="good-reduction")


def certify_good_reduction(A: int, B: int, C: int, p: int) -> bool:
    """Local solvability at a place of good reduction: exhaustive smooth
    point count for p <= 37; for p > 37 the smooth projective quartic
    curve w^2 = A x^4 + B y^4 (and its reduction count by the Weil
    bound q + 1 - 6 sqrt(q) > 0) guarantees a smooth point."""
    if p == 2 or (A * B * C) % p == 0:
        return False
    if p > 37:
        return True
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if x == y == z == 0:
                    continue
                rhs = (A * x ** 4 + B * y ** 4 + C * z ** 4) % p
                if rhs and sympy.legendre_symbol(rhs, p) == 1:
                    # w != 0: the gradient entry -2w is a unit
                    return True
    return False


def verdict(profiles) -> Verdict:
    """Minkowski-sum rule: obstructed only when no choice of one
    attained vector per place sums to zero in (Q/Z)^n and every finite
    profile is exact (real profiles are sampled and tagged)."""
    profiles = tuple(profiles)
    if any(not pr.invariants for pr in profiles):
        return Verdict(profiles, "inconclusive")
    lengths = {len(v) for pr in profiles for v in pr.invariants}
    if len(lengths) != 1:
        raise ValueError("profiles analyze different class vectors")
    n = lengths.pop()
    if any(pr.place != "R" and pr.method == "exact-enumeration"
           and pr.undetermined > 0 for pr in profiles):
        return Verdict(profiles, "inconclusive")
    zero = tuple(Fraction(0) for _ in range(n))
    for choice in itertools.product(*(pr.invariants for pr in profiles)):
        total = tuple(sum(col) % 1 for col in zip(*choice))
        if total == zero:
            return Verdict(profiles, "not_obstructed_by_class")
    return Verdict(profiles, "obstructed")
