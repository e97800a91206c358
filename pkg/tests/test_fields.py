import pytest
import sympy

from dp2.local.fields import FieldTower, reduce_mod_ideal

S, T = sympy.symbols("s t")


def test_quadratic_tower_reduce():
    tower = FieldTower(gens=(S,), relations=(S ** 2 - 2,),
                       embeddings=(sympy.sqrt(2),))
    assert tower.reduce(S ** 2) == 2
    assert tower.reduce(S ** 3 - 2 * S) == 0
    assert tower.is_zero((S - 1) * (S + 1) - 1)


def test_tower_with_extra_symbols():
    x = sympy.Symbol("x")
    tower = FieldTower(gens=(S,), relations=(S ** 2 + 1,),
                       embeddings=(sympy.I,))
    expr = (x + S) * (x - S)
    assert tower.reduce(expr, (x,)) == x ** 2 + 1


def test_two_floor_tower():
    tower = FieldTower(gens=(S, T),
                       relations=(S ** 2 - 2, T ** 2 - 3),
                       embeddings=(sympy.sqrt(2), sympy.sqrt(3)))
    assert tower.is_zero((S * T) ** 2 - 6)
    assert tower.reduce(S ** 2 * T ** 3) == 6 * T


def test_tower_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        FieldTower(gens=(S, T), relations=(S ** 2 - 2,),
                   embeddings=(sympy.sqrt(2),))


def test_tower_rejects_degree_above_cap():
    with pytest.raises(ValueError):
        FieldTower(gens=(S,), relations=(S ** 17 - 2,),
                   embeddings=(2 ** sympy.Rational(1, 17),))


def test_tower_rejects_wrong_embedding():
    with pytest.raises(ValueError):
        FieldTower(gens=(S,), relations=(S ** 2 - 2,),
                   embeddings=(sympy.Integer(1),))


def test_tower_rejects_reducible_relation():
    # s^2 - 4 factors over Q; the embedding degree gives it away
    with pytest.raises(ValueError):
        FieldTower(gens=(S,), relations=(S ** 2 - 4,),
                   embeddings=(sympy.Integer(2),))


def test_reduce_mod_ideal():
    x = sympy.Symbol("x")
    rem = reduce_mod_ideal(x ** 2 * S + x, (S ** 2 - 2, x ** 2 - 3),
                           (x, S))
    assert sympy.expand(rem - (3 * S + x)) == 0
