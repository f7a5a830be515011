from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from khs.abgroups import (
    GroupValue,
    TorsionGroup,
    direct_sum,
    group_value_from_json,
    group_value_to_json,
    parse_ascii,
    render,
)

factors_st = st.lists(
    st.tuples(st.sampled_from([2, 3, 5, 7, 11, 691]), st.integers(1, 4)),
    max_size=5,
).map(tuple)

exact_st = factors_st.map(lambda fs: GroupValue.exact(TorsionGroup(fs)))
order_only_st = st.integers(2, 2**20).map(GroupValue.order_only)
unknown_st = st.just(GroupValue.unknown(note="test marker"))
cz_st = st.just(GroupValue.conjecturally_zero("test condition"))
value_st = st.one_of(exact_st, order_only_st, unknown_st, cz_st)


def test_torsion_group_canonical_form():
    a = TorsionGroup(((3, 2), (2, 3), (3, 1)))
    b = TorsionGroup(((2, 3), (3, 1), (3, 2)))
    assert a == b
    assert a.order() == 8 * 3 * 9
    assert a.p_part(3) == TorsionGroup(((3, 1), (3, 2)))
    assert TorsionGroup.from_orders(8, 9, 7).factors == ((2, 3), (3, 2), (7, 1))
    with pytest.raises(ValueError):
        TorsionGroup.from_orders(12)  # not a prime power


def test_direct_sum_examples():
    a = GroupValue.cyclic(3)
    b = GroupValue.cyclic(3, 2)
    assert direct_sum([a, b]) == GroupValue.exact(TorsionGroup(((3, 1), (3, 2))))
    assert direct_sum([GroupValue.trivial(), GroupValue.cyclic(691)]) == GroupValue.cyclic(691)
    s = direct_sum([GroupValue.order_only(64), GroupValue.cyclic(3)])
    assert s.kind == "order_only" and s.order() == 192


def test_direct_sum_unknown_dominates():
    s = direct_sum(
        [GroupValue.order_only(64), GroupValue.unknown(note="mystery"), GroupValue.cyclic(3)]
    )
    assert s.kind == "unknown"
    assert "mystery" in s.note


def test_direct_sum_conjecturally_zero_is_neutral_but_annotates():
    s = direct_sum([GroupValue.cyclic(3), GroupValue.conjecturally_zero("some condition")])
    assert s.kind == "exact" and s.group == TorsionGroup.cyclic(3)
    assert s.conditions == ("some condition",)


def test_order_only_one_forbidden():
    with pytest.raises(ValueError):
        GroupValue.order_only(1)


@given(st.lists(value_st, max_size=5))
def test_direct_sum_empty_and_orders(values):
    total = direct_sum(values)
    orders = [v.order() for v in values]
    if all(o is not None for o in orders):
        expected = 1
        for o in orders:
            expected *= o
        assert total.order() == expected
    else:
        assert total.order() is None
    assert direct_sum([]).same_value(GroupValue.trivial())


@given(value_st, value_st, value_st)
def test_direct_sum_associative_commutative(a, b, c):
    left = direct_sum([a, direct_sum([b, c])])
    right = direct_sum([direct_sum([a, b]), c])
    swapped = direct_sum([c, b, a])
    assert left.same_value(right)
    assert left.same_value(swapped)


def test_render_examples():
    assert render(GroupValue.exact(TorsionGroup.from_orders(8, 9, 7))) == "Z/8×Z/9×Z/7"
    assert render(GroupValue.order_only(64)) == "[64]"
    assert render(GroupValue.trivial()) == "0"
    assert render(GroupValue.exact(TorsionGroup.from_orders(2, 2, 8)))== "Z/8×(Z/2)^2"
    assert render(GroupValue.unknown(note="n", display="2^?")) == "[2^?]"
    assert render(GroupValue.unknown(note="n", display="K_8(Z)")) == "K_8(Z)"


def test_render_latex():
    v = GroupValue.exact(TorsionGroup.from_orders(2, 2, 9))
    assert render(v, "latex") == "(\\mathbb{Z}/2)^{2}\\times\\mathbb{Z}/9"
    assert render(GroupValue.unknown(note="n", display="K_8(Z)"), "latex") == "K_{8}(\\mathbb{Z})"
    assert render(GroupValue.unknown(note="n", display="2^?"), "latex") == "[2^{?}]"
    with pytest.raises(ValueError):
        render(GroupValue.trivial(), "html")


@given(st.one_of(exact_st, order_only_st))
def test_render_parse_roundtrip(value):
    assert parse_ascii(render(value)).same_value(value)


@given(value_st)
def test_json_roundtrip(value):
    assert group_value_from_json(group_value_to_json(value)) == value


def test_json_shapes():
    v = GroupValue.exact(TorsionGroup(((3, 2), (3, 2), (2, 1))))
    assert group_value_to_json(v) == {
        "kind": "exact",
        "factors": [
            {"prime": 2, "exp": 1, "count": 1},
            {"prime": 3, "exp": 2, "count": 2},
        ],
    }
    assert group_value_to_json(GroupValue.order_only(64)) == {"kind": "order_only", "order": 64}
