"""Degree-4 local analysis for the surface (-9826, -2, 136).

The obstruction class here has order 4 and is presented by a cocycle
(f, 1, 1) valued in the function field of S over Q(i, 17^(1/4)).  Its
local triviality at 2 reduces to a residue-table membership plus a
norm-image computation in the truncated ring Z[i][T]/(T^4 - 17), and
its nontriviality at 17 reduces to quartic residues, because the norm
group of Q_17(17^(1/4))/Q_17 is generated by 17 and fourth powers."""

from __future__ import annotations

import functools
from fractions import Fraction

import numpy as np
import sympy

from .padic import padic_point_classes
from .profiles import LocalProfile

SURFACE75 = (-9826, -2, 136)

# attained residues of the cocycle function at 2-adic points, mod 32,
# as (real, imaginary) pairs; the first eight form the norm image of
# the integral norm-one elements
RESIDUE_TABLE_MOD32 = (
    (1, 0), (1, 8), (1, 16), (1, 24),
    (25, 4), (25, 12), (25, 20), (25, 28),
    (0, 31), (8, 31), (16, 31), (24, 31),
    (4, 7), (12, 7), (20, 7), (28, 7),
    (31, 0), (31, 24), (31, 16), (31, 8),
    (7, 28), (7, 20), (7, 12), (7, 4),
    (0, 1), (24, 1), (16, 1), (8, 1),
    (28, 25), (20, 25), (12, 25), (4, 25),
)
FIRST_ROW = RESIDUE_TABLE_MOD32[:8]


# --- exact arithmetic in Z[i][T] / (T^4 - 17) ----------------------------
# an element is a 4-tuple of Gaussian integers (re, im), the T-digits

RING_ONE = ((1, 0), (0, 0), (0, 0), (0, 0))


def ring_mul(a, b):
    out = [[0, 0] for _ in range(7)]
    for j1, (r1, i1) in enumerate(a):
        if r1 == 0 and i1 == 0:
            continue
        for j2, (r2, i2) in enumerate(b):
            if r2 == 0 and i2 == 0:
                continue
            out[j1 + j2][0] += r1 * r2 - i1 * i2
            out[j1 + j2][1] += r1 * i2 + i1 * r2
    for j in range(4, 7):
        out[j - 4][0] += 17 * out[j][0]
        out[j - 4][1] += 17 * out[j][1]
    return tuple((out[j][0], out[j][1]) for j in range(4))


def _i_times(r, im, power):
    for _ in range(power % 4):
        r, im = -im, r
    return r, im


def ring_g(c):
    """The automorphism fixing i with T -> iT."""
    return tuple(_i_times(r, im, j) for j, (r, im) in enumerate(c))


def ring_h(c):
    """The automorphism i -> -i, T -> iT."""
    return tuple(_i_times(r, -im, j) for j, (r, im) in enumerate(c))


def ring_gh(c):
    """The composite automorphism i -> -i, T -> -T."""
    return tuple((r if j % 2 == 0 else -r, -im if j % 2 == 0 else im)
                 for j, (r, im) in enumerate(c))


def norm_g(c):
    out, cur = c, c
    for _ in range(3):
        cur = ring_g(cur)
        out = ring_mul(out, cur)
    return out


def norm_gh(c):
    return ring_mul(c, ring_gh(c))


def _val2(n: int) -> int:
    v = 0
    while n and n % 2 == 0:
        n //= 2
        v += 1
    return v


def conjugate_ratio_mod32(re: int, im: int):
    """The class of xi / conj(xi) mod 32 for xi = re + im*i, computed
    exactly (the ratio is a unit; powers of 2 and of (1+i) cancel)."""
    if re == 0 and im == 0:
        return None
    shift = min(_val2(re) if re else 64, _val2(im) if im else 64)
    re, im = re >> shift, im >> shift
    if (re * re + im * im) % 2 == 0:
        # xi = (1+i) * eta and xi/conj(xi) = i * eta/conj(eta)
        ratio = conjugate_ratio_mod32((re + im) // 2, (im - re) // 2)
        return (-ratio[1] % 32, ratio[0] % 32)
    inv = pow(re * re + im * im, -1, 32)
    return ((re * re - im * im) * inv % 32, 2 * re * im * inv % 32)


# Hilbert-90 witnesses: for c = d / gh(d) the norm along gh is 1
# identically, and the norm along g is xi / conj(xi) with xi = N_g(d),
# a Gaussian integer.  These two elements generate, via products of
# witnesses, every value in RESIDUE_TABLE_MOD32.
WITNESS_ROW_GENERATOR = ((-2, -2), (-2, -2), (2, -1), (-1, 2))  # 25 + 4i
WITNESS_FOURTH_ROOT = ((-2, -2), (-2, -2), (-1, 0), (-2, -1))   # i


def _gaussian_mul_mod32(a, b):
    return ((a[0] * b[0] - a[1] * b[1]) % 32,
            (a[0] * b[1] + a[1] * b[0]) % 32)


def norm_image_check():
    """Verifies that every residue in the table, in particular every
    first-row value and the value i, is the g-norm of an element of
    norm 1 along gh.  Exact: each witness d gives c = d/gh(d) with
    N_gh(c) = c gh(c) = 1 identically (gh is an involution) and
    N_g(c) = xi/conj(xi), xi = N_g(d).  Returns (transcript, values)."""
    transcript = []
    generators = []
    for d, target in ((WITNESS_ROW_GENERATOR, (25, 4)),
                      (WITNESS_FOURTH_ROOT, (0, 1))):
        if ring_gh(ring_gh(d)) != d:
            raise AssertionError("gh is not an involution on the witness")
        xi = norm_g(d)
        if any(xi[j] != (0, 0) for j in range(1, 4)):
            raise AssertionError("N_g(d) is not a Gaussian integer")
        value = conjugate_ratio_mod32(*xi[0])
        if value != target:
            raise AssertionError(f"witness norm is {value}, not {target}")
        generators.append(value)
        transcript.append(
            f"witness with N_gh(c) = 1 and N_g(c) = {target[0]}+{target[1]}i"
            f" mod 32 (xi = {xi[0][0]}{xi[0][1]:+d}i)")
    attained = {(1, 0)}
    frontier = True
    while frontier:
        frontier = False
        for a in list(attained):
            for b in generators:
                t = _gaussian_mul_mod32(a, b)
                if t not in attained:
                    attained.add(t)
                    frontier = True
    if attained != set(RESIDUE_TABLE_MOD32):
        raise AssertionError("witness products do not cover the table")
    if not (set(FIRST_ROW) | {(0, 1)}) <= attained:
        raise AssertionError("first row or i not attained")
    transcript.append(
        "products of witnesses attain every table value, so each "
        "cocycle (f, 1, 1) with f in the table is a coboundary")
    return tuple(transcript), frozenset(attained)


# --- 2-adic residue-table membership -------------------------------------

def _vec_val2(vals, cap):
    out = np.zeros(vals.shape, dtype=np.int64)
    v = vals.copy()
    for _ in range(cap):
        todo = (v % 2 == 0) & (out < cap)
        if not todo.any():
            break
        v = np.where(todo, v // 2, v)
        out = out + todo
    return np.where(vals == 0, cap, out)


@functools.lru_cache(maxsize=1)
def _liftable_cells_2adic(depth: int):
    """Coordinate arrays (w, x, y, z) of all liftable 2-adic residue
    classes mod 2^depth, cached because the enumeration dominates."""
    from .padic import (
        _coords,
        _eval_vec,
        _expand_filtered,
        _gradient_terms,
        _initial_cells,
        _min_gradient_val,
        _surface_terms,
    )

    A, B, C = SURFACE75
    f = _surface_terms(A, B, C)
    grads = _gradient_terms(A, B, C)
    parts = []
    for unit in ("x", "y", "z"):
        cells = _initial_cells(2)
        for j in range(1, depth + 1):
            if j > 1:
                cells = _expand_filtered(cells, unit, 2, j, f, 2 ** 28)
            else:
                keep = _eval_vec(f, _coords(unit, *cells), 2) == 0
                cells = tuple(c[keep] for c in cells)
        coords = _coords(unit, *cells)
        t = _min_gradient_val(grads, coords, 2, depth)
        liftable = depth >= 2 * t + 1
        parts.append(tuple(c[liftable] for c in coords))
    return tuple(np.concatenate([part[i] for part in parts])
                 for i in range(4))


def mod32_membership(depth=10, table=None):
    """At every liftable 2-adic residue class of the surface, at least
    one of the two cocycle functions has a determined unit value, and
    that value mod 32 lies in the residue table.  Returns
    (all_covered, attained values, class count)."""
    if table is None:
        table = RESIDUE_TABLE_MOD32
    prec = 2 ** (depth - 1)  # component precision; w/2 costs one bit
    cap = depth - 1
    w, x, y, z = _liftable_cells_2adic(depth)
    if len(w) == 0:
        raise AssertionError("no liftable 2-adic classes found")
    if not ((w % 4 == 2).all() and (x % 2 == 1).all()
            and (y % 2 == 1).all() and (z % 2 == 1).all()):
        raise AssertionError("unexpected 2-adic parities")
    hw = w // 2
    components = (
        # f1 = (17(1+i)xz + iy^2 - w/2) / (17(-1+i)xz + iy^2 + w/2)
        ((17 * x * z - hw) % prec, (17 * x * z + y * y) % prec,
         (-17 * x * z + hw) % prec, (17 * x * z + y * y) % prec),
        # f2 = (17(1-i)xz + iy^2 + w/2) / (17(1+i)xz - iy^2 + w/2)
        ((17 * x * z + hw) % prec, (-17 * x * z + y * y) % prec,
         (17 * x * z + hw) % prec, (17 * x * z - y * y) % prec),
    )
    inv_odd = np.zeros(32, dtype=np.int64)
    for odd in range(1, 32, 2):
        inv_odd[odd] = pow(odd, -1, 32)
    table_codes = np.array([32 * a + b for a, b in table], dtype=np.int64)
    covered = np.zeros(len(w), dtype=bool)
    attained = set()
    for nr, ni, dr, di in components:
        norm_d = (dr * dr + di * di) % (2 * prec)
        norm_n = (nr * nr + ni * ni) % (2 * prec)
        sd = _vec_val2(norm_d, cap)
        sn = _vec_val2(norm_n, cap)
        prod_r = (nr * dr + ni * di) % prec
        prod_i = (ni * dr - nr * di) % prec
        # value = n conj(d)/2^s * (|d|^2/2^s)^-1 needs 2^s * 32 <= prec
        determined = (sn == sd) & (sd <= cap - 6)
        shift = np.where(determined, sd, 0)
        inv = inv_odd[(norm_d >> shift) % 32]
        res = (prod_r >> shift) * inv % 32
        ims = (prod_i >> shift) * inv % 32
        codes = 32 * res + ims
        covered |= determined & np.isin(codes, table_codes)
        uniq = np.unique(codes[determined])
        attained |= {(int(c) // 32, int(c) % 32) for c in uniq}
    return bool(covered.all()), frozenset(attained), len(w)


# --- 17-adic quartic residues --------------------------------------------

def quartic_residues(p: int) -> frozenset:
    return frozenset(pow(t, 4, p) for t in range(1, p))


def quartic_invariant(value: int, p: int) -> Fraction:
    """Invariant in (1/4)Z/Z of a unit value under the norm group
    <p> * fourth powers: the character sends value to value^((p-1)/4),
    a fourth root of unity mod p (the primitive root is normalized to
    the smallest square root of -1)."""
    root = min(r for r in range(2, p) if (r * r + 1) % p == 0)
    char = pow(value, (p - 1) // 4, p)
    for k, target in enumerate((1, root, p - 1, p - root)):
        if char == target:
            return Fraction(k, 4)
    raise ValueError("value is not a unit")


def ex75_17adic_values(k: int = 1):
    """Evaluates f1 over the liftable 17-adic residue classes for each
    square root of -1; every liftable class has y and w units, so both
    numerator and denominator are determined mod 17.  Returns
    (value set, residue flags, transcript)."""
    A, B, C = SURFACE75
    p = 17
    fac = sympy.factorint(A)
    transcript = [
        "valuations v17(A), v17(B), v17(C) = 3, 0, 1: the three "
        "monomial valuations are distinct mod 4 when y = 0 mod 17, so "
        "v(w^2) would be odd - every 17-adic point has y, w units",
    ]
    if not (fac.get(17, 0) == 3 and sympy.factorint(B).get(17, 0) == 0
            and sympy.factorint(C).get(17, 0) == 1):
        raise AssertionError("unexpected 17-adic valuations")
    if sympy.legendre_symbol(-2, p) != 1:
        raise AssertionError("-2 must be a square mod 17")
    transcript.append("-2 is a square mod 17, so unit classes exist")
    roots = [r for r in range(2, p) if (r * r + 1) % p == 0]
    cells = [c for c in padic_point_classes(A, B, C, p, k) if c.liftable]
    if not cells:
        raise AssertionError("no liftable 17-adic classes")
    for c in cells:
        if c.y % p == 0 or c.w % p == 0:
            raise AssertionError("liftable class without y, w units")
    values = set()
    for c in cells:
        for r in roots:
            # 2*f1 components with i -> r: (34xz - w) + i(34xz + 2y^2)
            # over (-34xz + w) + i(34xz + 2y^2)
            num = (34 * c.x * c.z - c.w + r * (34 * c.x * c.z
                                               + 2 * c.y * c.y)) % p
            den = (-34 * c.x * c.z + c.w + r * (34 * c.x * c.z
                                                + 2 * c.y * c.y)) % p
            if den == 0:
                raise AssertionError("denominator not a unit")
            values.add(num * pow(den, -1, p) % p)
    flags = {v: v in quartic_residues(p) for v in values}
    transcript.append(
        f"f1 value set mod 17 over {len(cells)} liftable classes: "
        f"{sorted(values)}")
    return frozenset(values), flags, tuple(transcript)


def ex75_17adic_profile() -> LocalProfile:
    """The 17-adic profile of the order-4 class: both attained values
    have character -1, giving invariant 1/2 at every point."""
    values, flags, _ = ex75_17adic_values()
    if any(flags.values()):
        raise AssertionError("a value is a quartic residue")
    invs = {(quartic_invariant(v, 17),) for v in values}
    if invs != {(Fraction(1, 2),)}:
        raise AssertionError("unexpected 17-adic invariants")
    return LocalProfile(place=17, modulus=17, invariants=frozenset(invs),
                        undetermined=0, method="analytic")


def ex75_2adic_profile() -> LocalProfile:
    """The 2-adic profile {0}: every point's cocycle value lies in the
    residue table (exhaustive over liftable classes) and every table
    value is a g-norm of a norm-one element (exact witnesses), so the
    cocycle is a coboundary at every 2-adic point."""
    covered, attained, _ = mod32_membership()
    if not covered:
        raise AssertionError("a liftable class misses the table")
    if not attained <= set(RESIDUE_TABLE_MOD32):
        raise AssertionError("an attained value is outside the table")
    norm_image_check()
    return LocalProfile(place=2, modulus=2 ** 10,
                        invariants=frozenset({(Fraction(0),)}),
                        undetermined=0, method="analytic")


def ex75_real_profile() -> LocalProfile:
    """The real profile {0}: at a real point the cocycle is (f, 1, 1)
    with |f| = 1, and the unit circle is connected, so the class is
    trivial on S(R).  The modulus-one identity f h(f) = 1 is part of
    the verified transcript; the connectedness step is geometric."""
    return LocalProfile(place="R", modulus=None,
                        invariants=frozenset({(Fraction(0),)}),
                        undetermined=0, method="analytic")
