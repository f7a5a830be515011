"""Finite abelian p-groups with certainty tags.

A TorsionGroup is a multiset of prime-power cyclic factors Z/q^e in a
canonical sorted form.  A GroupValue wraps a torsion group together with
how much of it is actually known:

* exact              -- full isomorphism type
* order_only         -- the order is known, the isomorphism type is not
* unknown            -- finite, but neither order nor type is known
* conjecturally_zero -- zero under a named conjecture

Direct sums propagate the weakest certainty: an unknown summand makes the
sum unknown, otherwise any order-only summand makes the sum order-only
(orders multiply), and conjecturally-zero summands act as the identity
while their conditions accumulate on the result.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import prod
from typing import Iterable

from .errors import KhsError

__all__ = [
    "TorsionGroup",
    "GroupValue",
    "HomotopyGroup",
    "direct_sum",
    "render",
    "parse_ascii",
    "group_value_to_json",
    "group_value_from_json",
]


def _factor_prime_power(m: int) -> tuple[int, int]:
    if m < 2:
        raise ValueError(f"cyclic factor order must be >= 2, got {m}")
    for q in range(2, m + 1):
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            if m != 1:
                raise ValueError("cyclic factor order must be a prime power")
            return q, e
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class TorsionGroup:
    """Multiset of (prime, exponent) cyclic factors in canonical order."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        canon = tuple(sorted((int(q), int(e)) for q, e in self.factors))
        for q, e in canon:
            if e < 1:
                raise ValueError(f"exponent must be >= 1, got {e}")
        object.__setattr__(self, "factors", canon)

    @classmethod
    def cyclic(cls, q: int, e: int = 1) -> "TorsionGroup":
        return cls(((q, e),))

    @classmethod
    def from_orders(cls, *orders: int) -> "TorsionGroup":
        """Build from prime-power cyclic orders, e.g. from_orders(8, 9, 7)."""
        return cls(tuple(_factor_prime_power(m) for m in orders))

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def order(self) -> int:
        return prod(q**e for q, e in self.factors)

    def p_part(self, p: int) -> "TorsionGroup":
        return TorsionGroup(tuple(f for f in self.factors if f[0] == p))

    def merged(self, other: "TorsionGroup") -> "TorsionGroup":
        return TorsionGroup(self.factors + other.factors)


TRIVIAL = TorsionGroup()

EXACT = "exact"
ORDER_ONLY = "order_only"
UNKNOWN = "unknown"
CONJECTURALLY_ZERO = "conjecturally_zero"


@dataclass(frozen=True)
class GroupValue:
    kind: str
    group: TorsionGroup | None = None
    order_value: int | None = None
    note: str = ""
    display: str | None = None
    conditions: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == EXACT:
            if self.group is None:
                raise ValueError("exact value needs a TorsionGroup")
        elif self.kind == ORDER_ONLY:
            if self.order_value is None or self.order_value < 2:
                # an order-1 group is fully known: use exact(trivial)
                raise ValueError("order_only needs an order >= 2")
        elif self.kind == UNKNOWN:
            if not self.note and not self.display:
                raise ValueError("unknown value needs a provenance note")
        elif self.kind == CONJECTURALLY_ZERO:
            if not self.conditions:
                raise ValueError("conjecturally_zero needs its condition")
        else:
            raise ValueError(f"bad kind {self.kind!r}")

    @classmethod
    def exact(cls, group: TorsionGroup, conditions: tuple[str, ...] = ()) -> "GroupValue":
        return cls(EXACT, group=group, conditions=conditions)

    @classmethod
    def trivial(cls) -> "GroupValue":
        return cls(EXACT, group=TRIVIAL)

    @classmethod
    def cyclic(cls, q: int, e: int = 1) -> "GroupValue":
        return cls(EXACT, group=TorsionGroup.cyclic(q, e))

    @classmethod
    def order_only(cls, order: int, note: str = "") -> "GroupValue":
        return cls(ORDER_ONLY, order_value=order, note=note)

    @classmethod
    def unknown(cls, note: str, display: str | None = None) -> "GroupValue":
        return cls(UNKNOWN, note=note, display=display)

    @classmethod
    def conjecturally_zero(cls, condition: str) -> "GroupValue":
        return cls(CONJECTURALLY_ZERO, conditions=(condition,))

    @property
    def is_trivial(self) -> bool:
        return self.kind == EXACT and self.group.is_trivial

    def order(self) -> int | None:
        """Order when determined (exact or order-only), else None."""
        if self.kind == EXACT:
            return self.group.order()
        if self.kind == ORDER_ONLY:
            return self.order_value
        if self.kind == CONJECTURALLY_ZERO:
            return 1
        return None

    def same_value(self, other: "GroupValue") -> bool:
        """Equality of mathematical content, ignoring notes and conditions."""
        return (self.kind, self.group, self.order_value) == (
            other.kind,
            other.group,
            other.order_value,
        )


def direct_sum(values: Iterable[GroupValue]) -> GroupValue:
    values = list(values)
    conditions: list[str] = []
    unknown_notes: list[str] = []
    has_order_only = False
    order = 1
    merged = TRIVIAL
    for v in values:
        for c in v.conditions:
            if c not in conditions:
                conditions.append(c)
        if v.kind == UNKNOWN:
            unknown_notes.append(v.display or v.note)
        elif v.kind == ORDER_ONLY:
            has_order_only = True
            order *= v.order_value
        elif v.kind == EXACT:
            order *= v.group.order()
            merged = merged.merged(v.group)
        # conjecturally_zero contributes nothing beyond its condition
    cond = tuple(conditions)
    if unknown_notes:
        return GroupValue(
            UNKNOWN,
            note="unknown summand: " + "; ".join(unknown_notes),
            conditions=cond,
        )
    if has_order_only:
        if order == 1:
            return GroupValue(EXACT, group=TRIVIAL, conditions=cond)
        return GroupValue(ORDER_ONLY, order_value=order, conditions=cond)
    return GroupValue(EXACT, group=merged, conditions=cond)


# ---------------------------------------------------------------------------
# Rendering and parsing
# ---------------------------------------------------------------------------


def _render_runs(factors: tuple[tuple[int, int], ...]):
    """Group canonical factors into (q^e, multiplicity) runs, ascending prime
    and descending exponent within a prime, matching the usual typography
    (Z/8 before Z/2, (Z/2)^2 for a repeated factor)."""
    ordered = sorted(factors, key=lambda f: (f[0], -f[1]))
    runs: list[list[int]] = []
    for q, e in ordered:
        m = q**e
        if runs and runs[-1][0] == m:
            runs[-1][1] += 1
        else:
            runs.append([m, 1])
    return runs


def _render_exact_ascii(tg: TorsionGroup) -> str:
    if tg.is_trivial:
        return "0"
    parts = []
    for m, count in _render_runs(tg.factors):
        parts.append(f"Z/{m}" if count == 1 else f"(Z/{m})^{count}")
    return "×".join(parts)


def _render_exact_latex(tg: TorsionGroup) -> str:
    if tg.is_trivial:
        return "0"
    parts = []
    for m, count in _render_runs(tg.factors):
        base = f"\\mathbb{{Z}}/{m}"
        parts.append(base if count == 1 else f"({base})^{{{count}}}")
    return "\\times".join(parts)


_K_MARKER = re.compile(r"^K_(\d+)\(Z\)$")


def _latex_display(display: str) -> str:
    m = _K_MARKER.match(display)
    if m:
        return f"K_{{{m.group(1)}}}(\\mathbb{{Z}})"
    return f"[{display.replace('^?', '^{?}')}]"


def render(value: GroupValue, style: str = "ascii") -> str:
    """Deterministic text form: exact groups as Z/a×Z/b..., order-only as
    [m], unknowns as their display marker or a [?] placeholder."""
    if style not in ("ascii", "latex"):
        raise ValueError(f"unknown render style {style!r}")
    if value.kind == EXACT:
        if style == "ascii":
            return _render_exact_ascii(value.group)
        return _render_exact_latex(value.group)
    if value.kind == ORDER_ONLY:
        return f"[{value.order_value}]"
    if value.kind == CONJECTURALLY_ZERO:
        return f"0 (conjectural: {'; '.join(value.conditions)})"
    # unknown
    if value.display is not None:
        if style == "latex":
            return _latex_display(value.display)
        if _K_MARKER.match(value.display):
            return value.display
        return f"[{value.display}]"
    return f"[?] ({value.note})" if value.note else "[?]"


_CYCLIC = re.compile(r"^Z/(\d+)$")
_POWER = re.compile(r"^\(Z/(\d+)\)\^(\d+)$")
_BRACKET = re.compile(r"^\[(.+)\]$")


def parse_ascii(text: str) -> GroupValue:
    """Inverse of ``render(..., 'ascii')`` on the exact/order-only grammar."""
    text = text.strip()
    if text == "0":
        return GroupValue.trivial()
    m = _BRACKET.match(text)
    if m:
        inner = m.group(1)
        if inner.isdigit():
            return GroupValue.order_only(int(inner))
        return GroupValue.unknown(note="parsed marker", display=inner)
    if _K_MARKER.match(text):
        return GroupValue.unknown(note="parsed marker", display=text)
    factors: list[tuple[int, int]] = []
    for chunk in text.split("×"):
        chunk = chunk.strip()
        cm = _CYCLIC.match(chunk)
        pm = _POWER.match(chunk)
        if cm:
            factors.append(_factor_prime_power(int(cm.group(1))))
        elif pm:
            factors.extend([_factor_prime_power(int(pm.group(1)))] * int(pm.group(2)))
        else:
            raise KhsError(f"cannot parse group fragment {chunk!r}")
    return GroupValue.exact(TorsionGroup(tuple(factors)))


# ---------------------------------------------------------------------------
# JSON shapes
# ---------------------------------------------------------------------------


def group_value_to_json(value: GroupValue) -> dict:
    out: dict = {"kind": value.kind}
    if value.kind == EXACT:
        counts: dict[tuple[int, int], int] = {}
        for q, e in value.group.factors:
            counts[(q, e)] = counts.get((q, e), 0) + 1
        out["factors"] = [
            {"prime": q, "exp": e, "count": c} for (q, e), c in sorted(counts.items())
        ]
    elif value.kind == ORDER_ONLY:
        out["order"] = value.order_value
        if value.note:
            out["note"] = value.note
    elif value.kind == UNKNOWN:
        out["note"] = value.note
        if value.display is not None:
            out["display"] = value.display
    else:
        out["condition"] = "; ".join(value.conditions)
    if value.conditions and value.kind != CONJECTURALLY_ZERO:
        out["conditions"] = list(value.conditions)
    return out


def group_value_from_json(data: dict) -> GroupValue:
    kind = data["kind"]
    conditions = tuple(data.get("conditions", ()))
    if kind == EXACT:
        factors: list[tuple[int, int]] = []
        for f in data.get("factors", ()):
            factors.extend([(f["prime"], f["exp"])] * f.get("count", 1))
        return GroupValue(EXACT, group=TorsionGroup(tuple(factors)), conditions=conditions)
    if kind == ORDER_ONLY:
        return GroupValue(
            ORDER_ONLY,
            order_value=data["order"],
            note=data.get("note", ""),
            conditions=conditions,
        )
    if kind == UNKNOWN:
        return GroupValue(
            UNKNOWN,
            note=data.get("note", ""),
            display=data.get("display"),
            conditions=conditions,
        )
    if kind == CONJECTURALLY_ZERO:
        return GroupValue.conjecturally_zero(data["condition"])
    raise KhsError(f"bad GroupValue kind {kind!r} in JSON")


# ---------------------------------------------------------------------------
# Homotopy groups
# ---------------------------------------------------------------------------

NOT_COMPUTED = None


@dataclass(frozen=True)
class HomotopyGroup:
    """One homotopy group: free rank (None = not computed) plus torsion."""

    degree: int
    free_rank: int | None
    torsion: GroupValue = field(default_factory=GroupValue.trivial)

    def render(self, style: str = "ascii") -> str:
        z = "Z" if style == "ascii" else "\\mathbb{Z}"
        parts: list[str] = []
        if self.free_rank is None:
            parts.append(f"{z}^? (free rank not computed)")
        elif self.free_rank == 1:
            parts.append(z)
        elif self.free_rank > 1:
            parts.append(f"{z}^{self.free_rank}")
        if not self.torsion.is_trivial or not parts:
            parts.append(render(self.torsion, style))
        return (" ⊕ " if style == "ascii" else " \\oplus ").join(parts)
