from __future__ import annotations

import json

import pytest

from khs.abgroups import GroupValue, TorsionGroup, render
from khs.assemble import (
    contributing_primes,
    formula_vs_table_report,
    ks_free_rank,
    ks_group,
    ks_torsion_at_p,
    ks_torsion_at_p_via_kz,
    ks_total,
    reference_rows,
    render_row_ascii,
    table_generate,
    table_rows,
)
from khs.errors import NotPrimeError, OutOfValidatedRangeError


def test_ks_torsion_examples():
    assert ks_torsion_at_p(3, 11) == GroupValue.exact(TorsionGroup(((3, 1), (3, 2))))
    assert ks_torsion_at_p(691, 22) == GroupValue.cyclic(691)
    assert ks_torsion_at_p(5, 4).is_trivial
    with pytest.raises(NotPrimeError):
        ks_torsion_at_p(2, 4)


def test_routes_agree():
    for p in (3, 5, 7, 11, 13):
        for n in range(23):
            a = ks_torsion_at_p_via_kz(p, n)
            b = ks_torsion_at_p(p, n)
            assert a == b, (p, n)
            assert a.kind == "exact"


def test_free_rank_rule():
    ranks = [ks_free_rank(n) for n in range(23)]
    assert [n for n, r in enumerate(ranks) if r] == [0, 5, 9, 13, 17, 21]


def test_ks_group_examples():
    row = ks_group(14)
    assert row.sphere == GroupValue.exact(TorsionGroup.from_orders(2, 2))
    assert row.two_torsion_extra == GroupValue.exact(TorsionGroup.from_orders(4))
    assert row.sigma_coker_j == GroupValue.cyclic(3)
    assert row.sigma_cpbar == GroupValue.cyclic(3, 2)
    assert row.ktilde_z.is_trivial

    row8 = ks_group(8)
    assert row8.sphere == GroupValue.exact(TorsionGroup.from_orders(2, 2))
    assert row8.ktilde_z.kind == "unknown"
    assert render(row8.ktilde_z) == "K_8(Z)"

    row4 = ks_group(4)
    assert all(col.is_trivial for col in row4.columns())
    assert row4.free_rank == 0

    with pytest.raises(OutOfValidatedRangeError):
        ks_group(23)


def test_contributing_primes():
    cp22 = contributing_primes(22)
    assert set(cp22.primes) == {3, 5, 7, 11, 691}
    assert contributing_primes(3).primes == (3,)
    cp10 = contributing_primes(10)
    assert cp10.primes == (3, 5)  # numerator of B_6/6 is 1: no extra primes
    assert contributing_primes(8).kv_conditional
    assert not contributing_primes(22).kv_conditional


def test_contributing_primes_sound():
    """Primes outside the support set contribute nothing (spot check)."""
    from khs.numtheory import primes_below

    for n in range(23):
        support = set(contributing_primes(n).primes)
        for p in primes_below(101):
            if p == 2 or p in support:
                continue
            assert ks_torsion_at_p(p, n).is_trivial, (p, n)


def test_rows_match_embedded_reference():
    generated = table_rows(22)
    reference = reference_rows()
    assert len(generated) == len(reference) == 23
    for gen, ref in zip(generated, reference):
        assert gen.n == ref.n
        assert gen.free_rank == ref.free_rank
        for key, g_col, r_col in zip(
            ("sphere", "two_torsion_extra", "sigma_coker_j", "sigma_cpbar", "ktilde_z"),
            gen.columns(),
            ref.columns(),
        ):
            assert g_col.same_value(r_col), (gen.n, key)


def test_formula_vs_table_report_is_exactly_the_degree_12_quirk():
    report = formula_vs_table_report()
    assert [(m.n, m.p) for m in report] == [(12, 3)]
    quirk = report[0]
    assert quirk.computed == TorsionGroup()
    assert quirk.published == TorsionGroup.cyclic(3, 2)


def test_table_row_strings():
    rows = table_rows(22)
    assert render_row_ascii(rows[0]) == "Z"
    assert render_row_ascii(rows[4]) == "0"
    assert render_row_ascii(rows[22]) == "(Z/2)^2 ⊕ [2^?] ⊕ Z/3 ⊕ Z/691"


def test_table_generate_json():
    doc = json.loads(table_generate(4, "json"))
    assert isinstance(doc, list) and len(doc) == 5
    assert doc[0]["n"] == 0 and doc[0]["free_rank"] == 1
    assert doc[3]["sphere"]["factors"] == [
        {"prime": 2, "exp": 3, "count": 1},
        {"prime": 3, "exp": 1, "count": 1},
    ]


def test_table_generate_validation():
    with pytest.raises(OutOfValidatedRangeError):
        table_generate(30)
    with pytest.raises(ValueError):
        table_generate(22, "csv")


def test_table_generate_byte_stable():
    for fmt in ("ascii", "markdown", "latex", "json"):
        assert table_generate(22, fmt) == table_generate(22, fmt)


def test_ks_total():
    hg = ks_total(14)
    assert hg.free_rank == 0
    assert hg.torsion == GroupValue.exact(TorsionGroup(((2, 1), (2, 1), (2, 2), (3, 1), (3, 2))))
    hg19 = ks_total(19)
    assert hg19.torsion.kind == "order_only"  # the [64] marker dominates the row
    assert hg19.torsion.order() == 64 * 8 * 2 * 3 * 11


def test_table_generate_golden_files():
    from pathlib import Path

    data = Path(__file__).parent / "data"
    assert table_generate(22, "markdown") == (data / "table22.md").read_text()
    assert table_generate(22, "latex") == (data / "table22.tex").read_text()
    assert table_generate(22, "json") == (data / "table22.json").read_text()
