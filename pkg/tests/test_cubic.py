from fractions import Fraction

import pytest
import sympy

from dp2.local.cubic import (
    GAMMA,
    column_identity_check,
    cubic_pipeline,
    find_rational_h,
    is_cube_free_generic,
    norm_residual,
    solve_norm_equation,
)


def test_cube_free_gate():
    assert is_cube_free_generic(1, 2, 3, 4)
    assert is_cube_free_generic(2, 3, 5, 7)
    assert not is_cube_free_generic(1, 1, 2, 3)  # A/B = 1 is a cube
    assert not is_cube_free_generic(1, 8, 3, 5)  # B/A = 8 is a cube
    assert not is_cube_free_generic(2, 3, 6, 8)  # AB/CD = 1/8 is a cube
    with pytest.raises(ValueError):
        is_cube_free_generic(0, 1, 2, 3)
    with pytest.raises(ValueError):
        cubic_pipeline(1, 1, 2, 3)


def test_column_identity_three_coefficient_sets():
    assert column_identity_check(1, 2, 3, 4)
    assert column_identity_check(2, 3, 5, 7)
    assert column_identity_check(1, 2, 3, 5)


def test_norm_equation_search_and_residual():
    sol = solve_norm_equation(1, 2, 3, 4)
    assert sol is not None
    assert norm_residual(1, 2, 3, 4, sol) == Fraction(-3)
    # the printed-style small solution is also valid
    assert norm_residual(1, 2, 3, 4, (-1, -1, 0)) == Fraction(-3)
    assert solve_norm_equation(1, 2, 3, 4, bound=0) is None


def test_rational_h_not_proportional():
    sol = (Fraction(-1), Fraction(-1), Fraction(0))
    found = find_rational_h(1, 2, 3, 4, sol)
    assert found is not None
    h, lines = found
    assert not h.has(GAMMA)
    assert len(lines) == 3
    x, y, z, t = sympy.symbols("x y z t")
    form = x ** 3 + 2 * y ** 3 + 3 * z ** 3 + 4 * t ** 3
    ratio = sympy.cancel(h / form)
    assert ratio.has(x) or ratio.has(y) or ratio.has(z) or ratio.has(t)


def test_pipeline_report():
    rep = cubic_pipeline(1, 2, 3, 4)
    assert rep.column_identity
    assert rep.norm_solution is not None
    assert rep.h is not None and not rep.h.has(GAMMA)
    assert rep.presentation[0] == sympy.Rational(4, 6)
    assert len(rep.transcript) == 4


def test_pipeline_without_norm_solution():
    rep = cubic_pipeline(1, 2, 3, 4, search_bound=0)
    assert rep.norm_solution is None and rep.h is None
    assert "no norm-equation solution" in rep.transcript[-1]
