from __future__ import annotations

import pytest

from khs.abgroups import GroupValue, TorsionGroup, render
from khs.errors import NotPrimeError, OutOfValidatedRangeError
from khs.stems import (
    MAX_TABLE_DEGREE,
    classical_stem_row,
    coker_j_degrees,
    coker_j_torsion,
    coker_range_limit,
    image_of_j_torsion,
    sphere_torsion,
)


def test_image_of_j_examples():
    assert image_of_j_torsion(7, 11) == GroupValue.cyclic(7)  # 12 = 2*6
    assert image_of_j_torsion(3, 23) == GroupValue.cyclic(3, 2)  # 24 = 4*3*2
    assert image_of_j_torsion(5, 8).is_trivial
    assert image_of_j_torsion(3, 0).is_trivial  # degree-0 torsion is zero
    assert image_of_j_torsion(3, -1).is_trivial
    with pytest.raises(NotPrimeError):
        image_of_j_torsion(2, 3)


def test_image_of_j_support_is_minus_one_mod_period():
    for p in (3, 5, 7):
        period = 2 * (p - 1)
        for k in range(1, 10_001):
            nontrivial = not image_of_j_torsion(p, k).is_trivial
            assert nontrivial == ((k + 1) % period == 0), (p, k)


def test_coker_j_examples():
    assert coker_j_torsion(3, 10) == GroupValue.cyclic(3)  # beta_1
    assert coker_j_torsion(3, 13) == GroupValue.cyclic(3)  # alpha_1 beta_1
    assert coker_j_torsion(3, 9).is_trivial
    assert coker_j_torsion(3, -2).is_trivial


def test_coker_j_range_limit():
    assert coker_range_limit(3) == 30
    assert coker_j_torsion(3, 30) == GroupValue.cyclic(3)  # beta_1^3 on the boundary
    with pytest.raises(OutOfValidatedRangeError) as exc:
        coker_j_torsion(3, 31)
    assert "cokernel-of-J" in str(exc.value)


def test_coker_j_degrees_distinct():
    # distinct for p >= 5; enumeration shows no coincidences at p = 3 either
    for p in (3, 5, 7, 11):
        degs = [d for _, d in coker_j_degrees(p)]
        assert len(set(degs)) == 7, (p, degs)


def test_sphere_torsion_examples():
    assert sphere_torsion(3, 3) == GroupValue.cyclic(3)
    assert sphere_torsion(5, 7) == GroupValue.cyclic(5)
    assert sphere_torsion(3, 4).is_trivial
    assert sphere_torsion(3, 11) == GroupValue.cyclic(3, 2)


def test_stem_row_examples():
    row3 = classical_stem_row(3)
    assert row3.torsion_of_s == TorsionGroup.from_orders(8, 3)
    assert row3.extra_2_torsion == GroupValue.cyclic(2)
    assert classical_stem_row(19).extra_2_torsion.kind == "order_only"
    assert classical_stem_row(19).extra_2_torsion.order() == 64
    row22 = classical_stem_row(22)
    assert row22.extra_2_torsion.kind == "unknown"
    assert render(row22.extra_2_torsion) == "[2^?]"


def test_stem_row_range():
    with pytest.raises(OutOfValidatedRangeError) as exc:
        classical_stem_row(23)
    assert "2-primary stem table" in str(exc.value)
    with pytest.raises(OutOfValidatedRangeError):
        classical_stem_row(-1)


def test_table_vs_formula_cross_validation():
    """The odd p-parts of the tabulated stems match the image/cokernel
    formulas everywhere except the known degree-12 quirk of the published
    table (a Z/9 in the sphere column where the 12-stem is zero)."""
    mismatches = []
    for n in range(MAX_TABLE_DEGREE + 1):
        table_group = classical_stem_row(n).torsion_of_s
        for p in (3, 5, 7, 11):
            formula = sphere_torsion(p, n)
            if table_group.p_part(p) != formula.group:
                mismatches.append((n, p))
    assert mismatches == [(12, 3)]
    assert classical_stem_row(12).torsion_of_s.p_part(3) == TorsionGroup.cyclic(3, 2)
    assert sphere_torsion(3, 12).is_trivial
