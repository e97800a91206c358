"""p-adic point enumeration on w^2 = A x^4 + B y^4 + C z^4 and exact
invariant profiles of quaternion classes over the enumerated points.

Residue classes are refined digit by digit (vectorized, one level at a
time); a class is kept only while the surface congruence can still
hold, certified liftable by the multivariate Hensel criterion (depth
>= 2t+1 where t is the minimal valuation in the gradient), and
deepened automatically until every quaternion invariant is determined
or a depth cap is reached."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .hilbert import hilbert_symbol
from .profiles import LocalProfile

W, X, Y, Z = sympy.symbols("w x y z")

DEPTH_CAP = {2: 12}
DEPTH_CAP_ODD = 6


class CapacityError(RuntimeError):
    """Enumeration exceeded its cell budget or depth cap."""


@dataclass(frozen=True)
class PointClass:
    w: int
    x: int
    y: int
    z: int
    p: int
    k: int
    unit_coordinate: str
    liftable: bool

    @property
    def modulus(self) -> int:
        return self.p ** self.k


def compile_poly(expr):
    """Integer term list ((coeff, ew, ex, ey, ez), ...) for a polynomial
    with rational coefficients, scaled by the square of the coefficient
    denominator lcm (a square factor does not move a quaternion class)."""
    poly = sympy.Poly(sympy.expand(expr), W, X, Y, Z)
    denom = 1
    for c in poly.coeffs():
        denom = sympy.ilcm(denom, sympy.Rational(c).q)
    poly = sympy.Poly(poly.as_expr() * denom ** 2, W, X, Y, Z)
    return tuple((int(c), *map(int, mono))
                 for mono, c in zip(poly.monoms(), poly.coeffs()))


def eval_terms(terms, w, x, y, z, mod=None):
    acc = 0
    for c, ew, ex, ey, ez in terms:
        acc += c * w ** ew * x ** ex * y ** ey * z ** ez
    return acc % mod if mod is not None else acc


@dataclass(frozen=True)
class QuaternionClass:
    """The class of the quaternion algebra (d, g) on the surface."""

    d: Fraction
    g: object  # sympy expression in w, x, y, z (rational function)
    label: str = ""

    def numerator_terms(self):
        """Terms of num * squarefree(den): a representative of the same
        square class as g at every point, polynomial in w, x, y, z."""
        num, den = sympy.fraction(sympy.together(self.g))
        return compile_poly(sympy.expand(num * _squarefree_part(den)))


def _squarefree_part(den):
    if den == 1:
        return sympy.Integer(1)
    coeff, factors = sympy.sqf_list(sympy.Poly(den, W, X, Y, Z))
    coeff = sympy.Rational(coeff)
    c_int = coeff.p * coeff.q
    sf = 1
    for prime, e in sympy.factorint(abs(c_int)).items():
        if e % 2:
            sf *= prime
    if c_int < 0:
        sf = -sf
    out = sympy.Integer(sf)
    for fac, mult in factors:
        if mult % 2:
            out *= fac.as_expr()
    return out


def _surface_terms(A, B, C):
    return compile_poly(A * X ** 4 + B * Y ** 4 + C * Z ** 4 - W ** 2)


def _gradient_terms(A, B, C):
    f = A * X ** 4 + B * Y ** 4 + C * Z ** 4 - W ** 2
    return tuple(compile_poly(sympy.diff(f, v)) for v in (W, X, Y, Z))


def _eval_vec(terms, coords, m):
    """Vectorized polynomial evaluation mod m; coords already mod m."""
    w, x, y, z = coords
    acc = np.zeros(w.shape, dtype=np.int64)
    for c, ew, ex, ey, ez in terms:
        t = np.full(w.shape, c % m, dtype=np.int64)
        for base, e in ((w, ew), (x, ex), (y, ey), (z, ez)):
            for _ in range(e):
                t = t * base % m
        acc = (acc + t) % m
    return acc


def _vec_val(vals, p, cap):
    """Componentwise v_p, truncated at cap (the precision of vals)."""
    out = np.zeros(vals.shape, dtype=np.int64)
    v = vals.copy()
    for _ in range(cap):
        todo = (v % p == 0) & (out < cap)
        if not todo.any():
            break
        v = np.where(todo, v // p, v)
        out = out + todo
    return np.where(vals == 0, cap, np.minimum(out, cap))


def _coords(unit, w, a, b):
    one = np.ones_like(w)
    if unit == "x":
        return (w, one, a, b)
    if unit == "y":
        return (w, a, one, b)
    return (w, a, b, one)


def _initial_cells(p):
    r = np.arange(p, dtype=np.int64)
    w, a, b = np.meshgrid(r, r, r, indexing="ij")
    return w.ravel(), a.ravel(), b.ravel()


def _expand_filtered(cells, unit, p, j, f, budget_left):
    """Digit extensions of level-(j-1) cells on which the surface
    congruence holds mod p^j, expanded and filtered in bounded chunks."""
    w, a, b = cells
    n = len(w)
    if n == 0:
        return cells
    if n * p ** 3 > budget_left:
        raise CapacityError("residue enumeration budget exceeded")
    step = p ** (j - 1)
    r = np.arange(p, dtype=np.int64) * step
    dw, da, db = np.meshgrid(r, r, r, indexing="ij")
    dw, da, db = dw.ravel(), da.ravel(), db.ravel()
    chunk = max(1, 2 ** 21 // p ** 3)
    parts = []
    for lo in range(0, n, chunk):
        hi = min(n, lo + chunk)
        m = hi - lo
        cw = np.repeat(w[lo:hi], p ** 3) + np.tile(dw, m)
        ca = np.repeat(a[lo:hi], p ** 3) + np.tile(da, m)
        cb = np.repeat(b[lo:hi], p ** 3) + np.tile(db, m)
        keep = _eval_vec(f, _coords(unit, cw, ca, cb), p ** j) == 0
        parts.append((cw[keep], ca[keep], cb[keep]))
    return tuple(np.concatenate([part[i] for part in parts])
                 for i in range(3))


def _min_gradient_val(grads, coords, p, j):
    vals = [_vec_val(_eval_vec(g, coords, p ** j), p, j) for g in grads]
    return np.minimum.reduce(vals)


def padic_point_classes(A, B, C, p, k, budget=2 ** 27):
    """All residue classes mod p^k, with some coordinate among x, y, z
    normalized to 1, on which the surface congruence holds; each is
    tagged liftable when the Hensel criterion (k >= 2t+1 for t the
    minimal gradient valuation) certifies a p-adic point within
    distance p^(t-k) of the representative.  Every actual point lies
    in a liftable class, but for t > 0 a liftable class need not
    itself contain a point; coordinates are guaranteed only to the
    effective precision p^(k-t)."""
    f = _surface_terms(A, B, C)
    grads = _gradient_terms(A, B, C)
    out = []
    spent = 0
    for unit in ("x", "y", "z"):
        cells = _initial_cells(p)
        spent += p ** 3
        for j in range(1, k + 1):
            if j > 1:
                spent += len(cells[0]) * p ** 3
                cells = _expand_filtered(cells, unit, p, j, f,
                                         budget - spent)
            else:
                keep = _eval_vec(f, _coords(unit, *cells), p) == 0
                cells = tuple(c[keep] for c in cells)
        coords = _coords(unit, *cells)
        t = _min_gradient_val(grads, coords, p, k)
        liftable = k >= 2 * t + 1
        for i in range(len(cells[0])):
            out.append(PointClass(int(coords[0][i]), int(coords[1][i]),
                                  int(coords[2][i]), int(coords[3][i]),
                                  p=p, k=k, unit_coordinate=unit,
                                  liftable=bool(liftable[i])))
    return out


def _is_padic_square(d, p: int) -> bool:
    d = Fraction(d)
    from .hilbert import _unit_part_mod, _valuation
    if _valuation(d, p) % 2:
        return False
    if p == 2:
        return _unit_part_mod(d, 2, 8) == 1
    return sympy.legendre_symbol(_unit_part_mod(d, p, p), p) == 1


def _quaternion_columns(cls_terms, coords, p, j, tvals=None):
    """Per-class invariant columns: 0 / 1 (for 0, 1/2) / -1 undecided.

    tvals is the per-cell minimal gradient valuation t: the Hensel
    certificate only places a point within p^(t-j) of the cell
    representative, so values are trusted to effective precision
    p^(j-t) only; deciding at full depth would let cells that contain
    no actual point contribute invariants."""
    need = 3 if p == 2 else 1
    if tvals is None:
        tvals = np.zeros(coords[0].shape, dtype=np.int64)
    jeff = j - tvals
    cols = []
    for terms, d in cls_terms:
        if _is_padic_square(d, p):
            cols.append(np.zeros(coords[0].shape, dtype=np.int64))
            continue
        vals = _eval_vec(terms, coords, p ** j)
        v = _vec_val(vals, p, j)
        decided = (v < jeff) & (jeff - v >= need)
        unit = np.where(decided,
                        vals // np.power(p, np.minimum(v, j - 1))
                        % p ** need, 1)
        col = np.full(vals.shape, -1, dtype=np.int64)
        # the symbol depends only on v mod 2 and the unit mod p^need
        for parity in (0, 1):
            for u in range(1, p ** need):
                if p == 2 and u % 2 == 0:
                    continue
                if p != 2 and u % p == 0:
                    continue
                mask = decided & (v % 2 == parity) & (unit == u)
                if mask.any():
                    sym = hilbert_symbol(d, Fraction(p) ** parity * u, p)
                    col[mask] = 0 if sym == 1 else 1
        cols.append(col)
    return cols


def invariant_profile(classes, A, B, C, p, k_cap=None, budget=2 ** 27,
                      merge=None):
    """Attained invariant vectors of the given quaternion classes over
    all liftable p-adic point classes, with auto-deepening.

    merge optionally groups class indices, e.g. ((0, 3), (1, 4)): the
    grouped classes are equal in the Brauer group (different function
    representatives), so a group's invariant is decided when any
    member's is, and disagreement between decided members is an
    error."""
    if k_cap is None:
        k_cap = DEPTH_CAP.get(p, DEPTH_CAP_ODD)
    f = _surface_terms(A, B, C)
    grads = _gradient_terms(A, B, C)
    cls_terms = [(q.numerator_terms(), q.d) for q in classes]
    attained = set()
    undetermined = 0
    spent = 0
    max_depth = 1
    for unit in ("x", "y", "z"):
        cells = _initial_cells(p)
        spent += p ** 3
        for j in range(1, k_cap + 1):
            if j > 1:
                spent += len(cells[0]) * p ** 3
                cells = _expand_filtered(cells, unit, p, j, f,
                                         budget - spent)
            else:
                keep = _eval_vec(f, _coords(unit, *cells), p) == 0
                cells = tuple(c[keep] for c in cells)
            if not len(cells[0]):
                break
            max_depth = max(max_depth, j)
            coords = _coords(unit, *cells)
            t = _min_gradient_val(grads, coords, p, j)
            liftable = j >= 2 * t + 1
            cols = _quaternion_columns(cls_terms, coords, p, j, tvals=t)
            if merge is not None:
                merged = []
                for group in merge:
                    acc = np.full(len(cells[0]), -1, dtype=np.int64)
                    for idx in group:
                        col = cols[idx]
                        clash = (acc >= 0) & (col >= 0) & (acc != col)
                        if clash.any():
                            raise AssertionError(
                                "merged class representatives disagree")
                        acc = np.where((acc < 0) & (col >= 0), col, acc)
                    merged.append(acc)
                cols = merged
            decided = np.ones(len(cells[0]), dtype=bool)
            for col in cols:
                decided &= col >= 0
            done = liftable & decided
            if done.any():
                rows = np.stack([col[done] for col in cols], axis=1)
                for row in np.unique(rows, axis=0):
                    attained.add(tuple(Fraction(int(r), 2) for r in row))
            pending = ~done
            if j == k_cap:
                undetermined += int(pending.sum())
                break
            cells = tuple(c[pending] for c in cells)
            if not len(cells[0]):
                break
    return LocalProfile(place=p, modulus=p ** max_depth,
                        invariants=frozenset(attained),
                        undetermined=undetermined,
                        method="exact-enumeration")


def real_profile(classes, A, B, C, samples=10 ** 6, seed=0):
    """Sign analysis of each class over sampled real points, both
    w-sheets, stratified over the three affine charts."""
    rng = np.random.default_rng(seed)
    num_polys = [(q.numerator_terms(), q.d) for q in classes]
    attained = set()
    per_chart = max(samples // 6, 1)
    for unit in ("x", "y", "z"):
        for scale in (1.0, 10.0):
            a = rng.uniform(-scale, scale, per_chart)
            b = rng.uniform(-scale, scale, per_chart)
            one = np.ones_like(a)
            if unit == "x":
                x, y, z = one, a, b
            elif unit == "y":
                x, y, z = a, one, b
            else:
                x, y, z = a, b, one
            rhs = A * x ** 4 + B * y ** 4 + C * z ** 4
            mask = rhs > 0
            if not mask.any():
                continue
            x, y, z = x[mask], y[mask], z[mask]
            w = np.sqrt(rhs[mask])
            for sheet in (w, -w):
                vals = []
                for terms, d in num_polys:
                    acc = np.zeros_like(sheet)
                    for c, ew, ex, ey, ez in terms:
                        acc = acc + float(c) * sheet ** ew * x ** ex \
                            * y ** ey * z ** ez
                    vals.append(acc)
                ok = np.ones_like(sheet, dtype=bool)
                for acc in vals:
                    ok &= np.abs(acc) > 1e-9
                if not ok.any():
                    continue
                cols = []
                for (terms, d), acc in zip(num_polys, vals):
                    if d >= 0:
                        cols.append(np.zeros(int(ok.sum()), dtype=int))
                    else:
                        cols.append((acc[ok] < 0).astype(int))
                stacked = np.stack(cols, axis=1)
                for row in np.unique(stacked, axis=0):
                    attained.add(tuple(Fraction(int(r), 2) for r in row))
    return LocalProfile(place="R", modulus=None,
                        invariants=frozenset(attained),
                        undetermined=0, method="sampling")
