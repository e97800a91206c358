from fractions import Fraction

import pytest

from dp2.galois0 import (
    G0,
    IOTA_A,
    IOTA_B,
    IOTA_C,
    S3_MAPS,
    SIGMA,
    TAU,
    GroupElement,
    _canon_conj,
    generate_subgroup,
)
from dp2.kummer import (
    TABLE2,
    condition_holds,
    constraints,
    contained_up_to_symmetry,
    exponent_vector,
    float_oracle_agrees,
    galois_group,
    is_generic,
    row_subgroup,
    table2_match,
)


def test_exponent_vector_branches():
    v = exponent_vector(-2, 4)
    assert v.exps == ((2, Fraction(1, 4)),)
    assert v.phase == 1
    v = exponent_vector(9, 2)
    assert v.exps == ((3, Fraction(1)),)
    assert v.phase == 0
    v = exponent_vector(-6, 2)
    assert v.exps == ((2, Fraction(1, 2)), (3, Fraction(1, 2)))
    assert v.phase == 2
    with pytest.raises(ValueError):
        exponent_vector(0, 2)
    with pytest.raises(ValueError):
        exponent_vector(2, 3)


def test_factor_cap_rejects_huge_input():
    with pytest.raises(ValueError):
        exponent_vector(10 ** 19 + 7, 2)


def test_generic_coefficients_have_no_constraints():
    assert constraints(3, 5, 7) == []
    assert is_generic(3, 5, 7)
    assert galois_group(3, 5, 7).order == 128
    assert not is_generic(2, 3, 5)


def test_all_coefficients_one_gives_klein_four():
    g = galois_group(1, 1, 1)
    assert g.order == 4
    assert set(g.elements) == {GroupElement(c, 0, 0, 0) for c in (1, 3, 5, 7)}


def test_first_worked_example_group():
    g = galois_group(-6, -3, 2)
    assert g.order == 32 and g.onto_q
    assert IOTA_A * IOTA_B in g
    assert SIGMA * TAU * IOTA_A * IOTA_C in g


def test_remaining_worked_example_orders():
    assert galois_group(1, 1, -2).order == 8
    assert galois_group(34, 34, 34).order == 8
    assert galois_group(-9826, -2, 136).order == 16
    assert galois_group(-25, -5, 45).order == 32
    assert galois_group(2, 3, 5).order == 64


def test_order64_example_contained_in_maximal_class():
    g = galois_group(2, 3, 5)
    big = generate_subgroup([IOTA_A * TAU, IOTA_B, IOTA_C, SIGMA])
    assert contained_up_to_symmetry(g, big)


def test_float_oracle_on_worked_examples():
    for coeffs in [(-6, -3, 2), (1, 1, 1), (1, 1, -2), (34, 34, 34),
                   (-9826, -2, 136), (-25, -5, 45), (2, 3, 5), (3, 5, 7),
                   (-63, -7, 5), (48, -3, 1)]:
        assert float_oracle_agrees(*coeffs)


def test_constraint_solution_is_subgroup_onto_q():
    for coeffs in [(-6, -3, 2), (12, -3, 50), (-63, -7, 5), (8, 18, -98)]:
        g = galois_group(*coeffs)
        assert g.onto_q
        elems = set(g.elements)
        for a in g.elements:
            assert a.inverse() in elems


def test_table2_conditions_on_example_column():
    for row in TABLE2:
        assert condition_holds(row, *row.example)
        assert table2_match(*row.example) == row.index


def test_table2_condition_iff_containment():
    for src in TABLE2:
        g = galois_group(*src.example)
        for row in TABLE2:
            holds = condition_holds(row, *src.example)
            inside = contained_up_to_symmetry(g, row_subgroup(row))
            assert holds == inside, (src.index, row.index)


def test_table2_row_groups_have_index_two():
    for row in TABLE2:
        big = row_subgroup(row)
        assert big.order == 64 and big.onto_q


def test_generic_triple_matches_no_row():
    assert table2_match(3, 5, 7) is None


def test_s3_relabeling_equivariance():
    perms = {"id": (0, 1, 2), "ab": (1, 0, 2), "bc": (0, 2, 1),
             "ac": (2, 1, 0), "abc": (2, 0, 1), "acb": (1, 2, 0)}
    for coeffs in [(-6, -3, 2), (2, 3, 5), (-9826, -2, 136), (-63, -7, 5)]:
        g = galois_group(*coeffs)
        for name, pi in perms.items():
            permuted = tuple(coeffs[i] for i in pi)
            direct = galois_group(*permuted)
            image = generate_subgroup([S3_MAPS[name](x)
                                       for x in g.generators])
            assert _canon_conj(direct.mask()) == _canon_conj(image.mask())


def test_fourth_power_scaling_invariance():
    for coeffs in [(-6, -3, 2), (2, 3, 5), (1, 1, 1)]:
        base = set(galois_group(*coeffs).elements)
        for t in (2, 3):
            for slot in range(3):
                scaled = list(coeffs)
                scaled[slot] *= t ** 4
                assert set(galois_group(*scaled).elements) == base


def test_brauer_groups_of_worked_examples():
    from dp2.cohomology import h1_of_subgroup
    expected = {(-6, -3, 2): (2,), (1, 1, -2): (2,), (1, 1, 1): (2, 2, 2),
                (-9826, -2, 136): (4,), (34, 34, 34): (2, 2, 2),
                (-25, -5, 45): (2,)}
    for coeffs, divisors in expected.items():
        g = galois_group(*coeffs)
        assert h1_of_subgroup(g).divisors == divisors


def test_zero_coefficient_rejected():
    with pytest.raises(ValueError):
        galois_group(0, 1, 2)
