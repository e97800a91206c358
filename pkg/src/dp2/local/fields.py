"""Small number fields as explicit towers, with exact reduction of
polynomial expressions modulo the defining relations."""

from __future__ import annotations

from dataclasses import dataclass

import sympy


@dataclass(frozen=True)
class FieldTower:
    """A tower Q(g_1, ..., g_r) given by one defining relation per
    generator (monic over the previous floor), together with a complex
    embedding used to certify the declared degrees."""

    gens: tuple  # sympy symbols
    relations: tuple  # sympy expressions that vanish
    embeddings: tuple  # complex value of each generator

    def __post_init__(self):
        if not (len(self.gens) == len(self.relations)
                == len(self.embeddings)):
            raise ValueError("tower data lengths disagree")
        degree = 1
        for g, rel in zip(self.gens, self.relations):
            degree *= sympy.degree(rel, g)
        if degree > 16:
            raise ValueError("tower degree exceeds the cap of 16")
        self._verify()

    def _verify(self):
        # each relation vanishes at the embedding, and the embeddings
        # generate a Q-vector space of the declared degree (so each
        # floor is a field, not a product ring)
        subs = dict(zip(self.gens, self.embeddings))
        for rel in self.relations:
            val = complex(sympy.N(rel.subs(subs), 30))
            if abs(val) > 1e-15:
                raise ValueError(f"embedding does not satisfy {rel}")
        alpha = sum(v * sympy.Rational(3, 7) ** i
                    for i, v in enumerate(self.embeddings, start=1))
        degree = 1
        for g, rel in zip(self.gens, self.relations):
            degree *= sympy.degree(rel, g)
        minpoly = sympy.minimal_polynomial(alpha, sympy.Symbol("_t"))
        if sympy.degree(minpoly) != degree:
            raise ValueError("declared relations are not irreducible")

    def reduce(self, expr, extra_symbols=()):
        """Canonical form of expr modulo the defining relations."""
        expr = sympy.expand(expr)
        syms = tuple(extra_symbols) + tuple(reversed(self.gens))
        _, rem = sympy.reduced(expr, list(self.relations), gens=syms,
                               order="lex")
        return sympy.expand(rem)

    def is_zero(self, expr, extra_symbols=()) -> bool:
        return self.reduce(expr, extra_symbols) == 0


def reduce_mod_ideal(expr, relations, gens):
    """Remainder of expr under multivariate division by the relations
    (valid as an ideal-membership test when the leading terms of the
    relations are pairwise coprime in the chosen order)."""
    _, rem = sympy.reduced(sympy.expand(expr), list(relations),
                           gens=gens, order="lex")
    return sympy.expand(rem)
