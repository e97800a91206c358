"""The generic Galois group of order 128 and its action on the Picard lattice.

Elements are stored in radical coordinates (chi, e_s, e_k, e_m): chi in
(Z/8)* gives the action on zeta = e^{i pi/4} (zeta -> zeta^chi), e_s in Z/2
the sign on sqrt(A), and e_k, e_m in Z/4 the powers of i applied to the
fourth roots of B/A and C/A.  Composition twists the (e_k, e_m) part by
chi mod 4.  The five named generators act on the 56 exceptional curves by
an explicit table; everything else is derived from that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intlin import ColumnEchelon, IntMatrix
from .picard import (
    ANTICANONICAL,
    Axis,
    BASIS_LABELS,
    CurveLabel,
    Triple,
    Vec,
    all_labels,
    axis,
    build_lattice,
    intersection,
    triple,
)


@dataclass(frozen=True, order=True)
class GroupElement:
    chi: int
    e_s: int
    e_k: int
    e_m: int

    def __post_init__(self):
        if self.chi not in (1, 3, 5, 7) or self.e_s not in (0, 1) \
                or not (0 <= self.e_k <= 3 and 0 <= self.e_m <= 3):
            raise ValueError(f"bad element {self!r}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        tw = self.chi % 4  # how self twists the (e_k, e_m) part of other
        return GroupElement(
            (self.chi * other.chi) % 8,
            (self.e_s + other.e_s) % 2,
            (self.e_k + tw * other.e_k) % 4,
            (self.e_m + tw * other.e_m) % 4,
        )

    def inverse(self) -> "GroupElement":
        tw = self.chi % 4
        return GroupElement(self.chi, self.e_s,
                            (-tw * self.e_k) % 4, (-tw * self.e_m) % 4)

    def order(self) -> int:
        n, g = 1, self
        while g != IDENTITY:
            g = g * self
            n += 1
        return n


IDENTITY = GroupElement(1, 0, 0, 0)
SIGMA = GroupElement(7, 0, 0, 0)
TAU = GroupElement(3, 0, 0, 0)
IOTA_A = GroupElement(1, 1, 3, 3)
IOTA_B = GroupElement(1, 0, 1, 0)
IOTA_C = GroupElement(1, 0, 0, 1)

GENERATORS = {"sigma": SIGMA, "tau": TAU,
              "iota_a": IOTA_A, "iota_b": IOTA_B, "iota_c": IOTA_C}

ALL_ELEMENTS: tuple[GroupElement, ...] = tuple(sorted(
    GroupElement(chi, s, k, m)
    for chi in (1, 3, 5, 7) for s in (0, 1) for k in range(4) for m in range(4)
))
_INDEX = {g: i for i, g in enumerate(ALL_ELEMENTS)}


def _gen_act(name: str, lab: CurveLabel) -> CurveLabel:
    """Action of one named generator, straight from the published table."""
    if isinstance(lab, Axis):
        d, s = lab.d, lab.sign
        if name == "sigma":
            return axis(lab.axis, 7 * d, s)
        if name == "tau":
            return axis(lab.axis, 3 * d, s)
        # the involutions shift delta by a power of i depending on the axis,
        # and flip the sign on their own axis
        shifts = {
            "iota_a": {"z": 2, "x": None, "y": -2},
            "iota_b": {"z": -2, "x": 2, "y": None},
            "iota_c": {"z": None, "x": -2, "y": 2},
        }[name]
        sh = shifts[lab.axis]
        if sh is None:
            return axis(lab.axis, d, -s)
        return axis(lab.axis, d + sh, s)
    a, b, c = lab.a, lab.b, lab.c
    if name == "sigma":
        return triple(-a, -b, -c)
    if name == "tau":
        return triple(1 - a, 1 - b, 1 - c)
    if name == "iota_a":
        return triple(a + 1, b, c)
    if name == "iota_b":
        return triple(a, b + 1, c)
    return triple(a, b, c + 1)


def _word(g: GroupElement) -> list[str]:
    """Write g = iota_a^s iota_b^k' iota_c^m' q with q in {1, sigma, tau,
    sigma tau}; the list is ordered left-to-right."""
    s = g.e_s
    kp = (g.e_k - 3 * s) % 4
    mp = (g.e_m - 3 * s) % 4
    w = ["iota_a"] * s + ["iota_b"] * kp + ["iota_c"] * mp
    w += {1: [], 7: ["sigma"], 3: ["tau"], 5: ["sigma", "tau"]}[g.chi]
    return w


def act_on_curve(g: GroupElement, lab: CurveLabel) -> CurveLabel:
    for name in reversed(_word(g)):
        lab = _gen_act(name, lab)
    return lab


_LABELS = all_labels()
_LATTICE = build_lattice()


def verify_action_homomorphism() -> None:
    """Exhaustive consistency check: act(g*h) = act(g) o act(h)."""
    for g in ALL_ELEMENTS:
        for name, h in GENERATORS.items():
            gh = g * h
            for lab in _LABELS:
                if act_on_curve(gh, lab) != act_on_curve(g, _gen_act(name, lab)):
                    raise AssertionError(f"action not a homomorphism at {g}, {name}")


_MATRIX_LABELS = BASIS_LABELS + [Axis("z", 7, -1)]


@lru_cache(maxsize=None)
def matrix_of(g: GroupElement) -> IntMatrix:
    """8x8 matrix of g on Pic coordinates, verified on all 56 curves."""
    cols = [list(_LATTICE.cls(act_on_curve(g, lab))) for lab in _MATRIX_LABELS]
    # the eighth basis label has class v8 - v6 - v7, so correct its column
    col8 = [cols[7][i] + cols[5][i] + cols[6][i] for i in range(8)]
    cols[7] = col8
    m = IntMatrix.from_rows([[cols[j][i] for j in range(8)] for i in range(8)])

    def apply(vec: Vec) -> Vec:
        return tuple(sum(m[(i, j)] * vec[j] for j in range(8)) for i in range(8))

    for lab in _LABELS:
        if apply(_LATTICE.cls(lab)) != _LATTICE.cls(act_on_curve(g, lab)):
            raise AssertionError(f"induced matrix inconsistent for {g} at {lab}")
    if apply(ANTICANONICAL) != ANTICANONICAL:
        raise AssertionError(f"matrix of {g} moves the anticanonical class")
    return m


@dataclass(frozen=True)
class Subgroup:
    elements: tuple[GroupElement, ...]  # sorted
    generators: tuple[GroupElement, ...]
    onto_q: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def mask(self) -> int:
        m = 0
        for g in self.elements:
            m |= 1 << _INDEX[g]
        return m

    def __contains__(self, g: GroupElement) -> bool:
        return g in set(self.elements)


def _closure(gens) -> set[GroupElement]:
    elems = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(gens)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = cur * g
            if nxt not in elems:
                elems.add(nxt)
                frontier.append(nxt)
    return elems


def _onto_q(elems) -> bool:
    return {g.chi for g in elems} == {1, 3, 5, 7}


def generate_subgroup(gens) -> Subgroup:
    gens = tuple(gens)
    elems = tuple(sorted(_closure(gens)))
    return Subgroup(elements=elems, generators=gens, onto_q=_onto_q(elems))


G0 = generate_subgroup([SIGMA, TAU, IOTA_A, IOTA_B, IOTA_C])
H_SUBGROUP = generate_subgroup([IOTA_A, IOTA_B, IOTA_A * IOTA_B * IOTA_C])

# the six relabelings of the roles of A, B, C, as automorphisms of G0
_PHI_AB = lambda g: GroupElement(g.chi, (g.e_s + g.e_k) % 2,
                                 (-g.e_k) % 4, (g.e_m - g.e_k) % 4)
_PHI_BC = lambda g: GroupElement(g.chi, g.e_s, g.e_m, g.e_k)
_PHI_AC = lambda g: GroupElement(g.chi, (g.e_s + g.e_m) % 2,
                                 (g.e_k - g.e_m) % 4, (-g.e_m) % 4)


def _compose(f, h):
    return lambda g: f(h(g))


S3_MAPS = {
    "id": lambda g: g,
    "ab": _PHI_AB,
    "bc": _PHI_BC,
    "ac": _PHI_AC,
    "abc": _compose(_PHI_AB, _PHI_BC),
    "acb": _compose(_PHI_BC, _PHI_AB),
}


def verify_s3_automorphisms() -> None:
    for name, phi in S3_MAPS.items():
        imgs = {phi(g) for g in ALL_ELEMENTS}
        if len(imgs) != 128:
            raise AssertionError(f"{name} is not a bijection")
        for g in ALL_ELEMENTS:
            for h in (SIGMA, TAU, IOTA_A, IOTA_B, IOTA_C):
                if phi(g * h) != phi(g) * phi(h):
                    raise AssertionError(f"{name} is not a homomorphism")


# --- subgroup enumeration ------------------------------------------------

_MUL = None
_CONJ_PERMS = None
_S3_PERMS = None


def _tables():
    global _MUL, _CONJ_PERMS, _S3_PERMS
    if _MUL is None:
        n = len(ALL_ELEMENTS)
        _MUL = [[_INDEX[ALL_ELEMENTS[i] * ALL_ELEMENTS[j]] for j in range(n)]
                for i in range(n)]
        _CONJ_PERMS = []
        for g in ALL_ELEMENTS:
            gi = g.inverse()
            _CONJ_PERMS.append(tuple(_INDEX[g * x * gi] for x in ALL_ELEMENTS))
        _S3_PERMS = [tuple(_INDEX[phi(x)] for x in ALL_ELEMENTS)
                     for phi in S3_MAPS.values()]
    return _MUL, _CONJ_PERMS, _S3_PERMS


def _apply_perm(mask: int, perm) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _canon_conj(mask: int) -> int:
    _, conj, _ = _tables()
    return min(_apply_perm(mask, p) for p in conj)


def _canon_conj_s3(mask: int) -> int:
    _, conj, s3 = _tables()
    best = None
    for sp in s3:
        m2 = _apply_perm(mask, sp)
        for p in conj:
            c = _apply_perm(m2, p)
            if best is None or c < best:
                best = c
    return best


def _mask_closure(mask: int, new_idx: int) -> int:
    mul, _, _ = _tables()
    elems = [i for i in range(128) if mask >> i & 1]
    frontier = [new_idx]
    out = mask | 1 << new_idx
    gens = elems + [new_idx]
    while frontier:
        cur = frontier.pop()
        row = mul[cur]
        for g in gens:
            nxt = row[g]
            if not out >> nxt & 1:
                out |= 1 << nxt
                frontier.append(nxt)
    return out


def _subgroup_from_mask(mask: int) -> Subgroup:
    elems = tuple(ALL_ELEMENTS[i] for i in range(128) if mask >> i & 1)
    gens = _minimal_generators(elems)
    return Subgroup(elements=elems, generators=gens, onto_q=_onto_q(elems))


def _minimal_generators(elems) -> tuple[GroupElement, ...]:
    chosen: list[GroupElement] = []
    have = {IDENTITY}
    for g in sorted(elems, key=lambda e: (-e.order(), e)):
        if g not in have:
            chosen.append(g)
            have = _closure(chosen)
            if len(have) == len(elems):
                break
    return tuple(chosen)


@lru_cache(maxsize=1)
def all_subgroup_classes() -> tuple[int, ...]:
    """Canonical masks of all subgroups of G0 up to G0-conjugacy.

    Every subgroup of a 2-group of order 2^{n+1} is generated by an
    index-2 (hence normal) subgroup together with one extra element, so a
    layered extension of conjugacy-class representatives is exhaustive.
    """
    _, conj, _ = _tables()
    layer = {1 << _INDEX[IDENTITY]}
    seen = set(layer)
    canon_memo: dict[int, int] = {}
    while layer:
        nxt = set()
        for mask in layer:
            for i in range(128):
                if mask >> i & 1:
                    continue
                sq = _MUL[i][i]
                if not mask >> sq & 1:
                    continue
                if _apply_perm(mask, conj[i]) != mask:
                    continue
                new = _mask_closure(mask, i)
                canon = canon_memo.get(new)
                if canon is None:
                    canon = _canon_conj(new)
                    canon_memo[new] = canon
                if canon not in seen:
                    seen.add(canon)
                    nxt.add(canon)
        layer = nxt
    return tuple(sorted(seen))


@lru_cache(maxsize=1)
def enumerate_subgroups_onto_Q() -> tuple[Subgroup, ...]:
    """Subgroups surjecting onto Q = G0/H, up to conjugacy and the S3
    relabeling of the (A, B, C) roles, in deterministic order."""
    out = {}
    for mask in all_subgroup_classes():
        s = _subgroup_from_mask(mask)
        if not s.onto_q:
            continue
        canon = _canon_conj_s3(mask)
        if canon not in out:
            out[canon] = _subgroup_from_mask(canon)
    return tuple(s for _, s in sorted(out.items(),
                                      key=lambda kv: (kv[1].order, kv[0])))


# --- invariants ----------------------------------------------------------

def _abelian_type_from_orders(orders) -> tuple[int, ...]:
    """Invariant factors of a finite abelian 2-group from its element
    orders: counting elements of order dividing 2^k determines the type."""
    n = len(orders)
    if n == 1:
        return ()
    counts = {}
    for o in orders:
        counts[o] = counts.get(o, 0) + 1
    # exponents e_j of the cyclic decomposition Z/2^{e_1} x ... (descending)
    exps = []
    k = 1
    prev = 1
    while prev < n:
        le = sum(c for o, c in counts.items() if o <= 2 ** k)
        # number of cyclic factors with exponent >= k is log2(le/prev)
        exps.append((le // prev).bit_length() - 1)
        prev = le
        k += 1
    # multiplicity of the exponent-j factor is exps[j-1] - exps[j]
    factors = []
    for j in range(len(exps), 0, -1):
        mult = exps[j - 1] - (exps[j] if j < len(exps) else 0)
        factors.extend([2 ** j] * mult)
    return tuple(sorted(factors))


def abelianization(s: Subgroup) -> tuple[int, ...]:
    """Invariant factors (ascending) of s / [s, s]."""
    elems = set(s.elements)
    comms = {IDENTITY}
    for g in s.elements:
        gi = g.inverse()
        for h in s.elements:
            comms.add(gi * h.inverse() * g * h)
    derived = _closure(comms)
    # cosets of the derived subgroup
    reps = {}
    for g in s.elements:
        key = frozenset(g * d for d in derived)
        reps.setdefault(key, g)
    # order of a coset in the quotient
    coset_of = {}
    for key, g in reps.items():
        for x in key:
            coset_of[x] = key
    id_key = coset_of[IDENTITY]
    orders = []
    for key, g in reps.items():
        o, cur = 1, g
        while coset_of[cur] != id_key:
            cur = cur * g
            o += 1
        orders.append(o)
    return _abelian_type_from_orders(orders)


def fixed_sublattice(s: Subgroup):
    """Kernel basis of the stacked (matrix_of(g) - I) maps: M^s."""
    rows = []
    for g in s.generators if s.generators else ():
        m = matrix_of(g)
        for i in range(8):
            rows.append([m[(i, j)] - (1 if i == j else 0) for j in range(8)])
    if not rows:
        rows = [[0] * 8]
    ech = ColumnEchelon(rows)
    return ech.kernel()


def curve_orbit_lengths(s: Subgroup) -> tuple[int, ...]:
    perms = [{lab: act_on_curve(g, lab) for lab in _LABELS}
             for g in s.generators] or [{lab: lab for lab in _LABELS}]
    remaining = set(_LABELS)
    lengths = []
    while remaining:
        start = remaining.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for p in perms:
                nxt = p[cur]
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        remaining -= orbit
        lengths.append(len(orbit))
    return tuple(sorted(lengths))


def fingerprint(s: Subgroup, include_h1: bool = True) -> tuple:
    """Conjugation-invariant summary used to group subgroups that could be
    identified by a lattice automorphism."""
    traces = tuple(sorted(sum(matrix_of(g)[(i, i)] for i in range(8))
                          for g in s.elements))
    fp = (
        s.order,
        abelianization(s),
        max(g.order() for g in s.elements),
        curve_orbit_lengths(s),
        len(fixed_sublattice(s)),
        traces,
    )
    if include_h1:
        from .cohomology import h1_of_subgroup
        fp = fp + (h1_of_subgroup(s).divisors,)
    return fp


def is_abelian(elems) -> bool:
    elems = list(elems)
    return all(g * h == h * g for g in elems for h in elems)


def _complement_search(s: Subgroup, n_set: set) -> Subgroup | None:
    need = s.order // len(n_set)
    if need == 1:
        return generate_subgroup([])
    cands = list(s.elements)
    for i, t1 in enumerate(cands):
        for t2 in cands[i:]:
            t = _closure([t1, t2])
            if len(t) != need:
                continue
            if sum(1 for x in t if x in n_set) != 1:
                continue
            if not is_abelian(t):
                continue
            return generate_subgroup(_minimal_generators(tuple(sorted(t))))
    return None


def semidirect_decomposition(s: Subgroup):
    """Find an abelian normal subgroup with an abelian complement.

    Returns (N, T) as Subgroups, or None if the search fails.  Candidate
    normal subgroups are the preimages in s of subgroups of the image of
    chi (these are automatically normal); complements are searched among
    subgroups generated by at most two elements.
    """
    for u in ({1}, {1, 3}, {1, 5}, {1, 7}, {1, 3, 5, 7}):
        n_elems = tuple(sorted(g for g in s.elements if g.chi in u))
        if not is_abelian(n_elems):
            continue
        t = _complement_search(s, set(n_elems))
        if t is not None:
            return (generate_subgroup(_minimal_generators(n_elems)), t)
    return None
