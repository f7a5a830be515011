"""p-primary stable homotopy of the sphere in the computable range.

Two formula-driven summands and one static table live here:

* image of J: torsion of pi_k j is cyclic of order p^(s+1) exactly when
  2(p-1) divides k+1, writing k+1 = 2(p-1) p^s m with p not dividing m,
  and zero otherwise (any k, torsion only; pi_0 j is a free rank handled
  by the callers that need it).
* cokernel of J: in degrees <= 6p(p-1)-6 the torsion is Z/p in exactly
  seven degrees, the alpha/beta family, and zero otherwise.  Beyond that
  bound nothing is claimed, so queries fail instead of returning 0.
* the classical stem table for degrees 0..22, including the remaining
  2-primary torsion of pi_n K(S), shipped as static data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .abgroups import GroupValue, TorsionGroup, direct_sum, group_value_from_json
from .errors import NotPrimeError, OutOfValidatedRangeError
from .numtheory import is_prime

__all__ = [
    "image_of_j_torsion",
    "coker_j_torsion",
    "coker_j_degrees",
    "coker_range_limit",
    "sphere_torsion",
    "classical_stem_row",
    "StemTableEntry",
    "MAX_TABLE_DEGREE",
]

MAX_TABLE_DEGREE = 22


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"expected an odd prime, got {p}")


def image_of_j_torsion(p: int, k: int) -> GroupValue:
    """Torsion of pi_k of the p-complete connective image-of-J spectrum."""
    _require_odd_prime(p)
    if k <= 0 or (k + 1) % (2 * (p - 1)) != 0:
        return GroupValue.trivial()
    m = (k + 1) // (2 * (p - 1))
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return GroupValue.cyclic(p, s + 1)


def coker_range_limit(p: int) -> int:
    """Largest degree in which the cokernel-of-J table below is complete."""
    return 6 * p * (p - 1) - 6


def coker_j_degrees(p: int) -> tuple[tuple[str, int], ...]:
    """The seven degrees carrying a Z/p in the cokernel of J, with their
    generator names (alpha_1 lives in pi_{2p-3} j and multiplies in)."""
    return (
        ("beta_1", 2 * p * (p - 1) - 2),
        ("alpha_1 beta_1", 2 * (p + 1) * (p - 1) - 3),
        ("beta_1^2", 4 * p * (p - 1) - 4),
        ("alpha_1 beta_1^2", 2 * (2 * p + 1) * (p - 1) - 5),
        ("beta_2", 2 * (2 * p + 1) * (p - 1) - 2),
        ("alpha_1 beta_2", 4 * (p + 1) * (p - 1) - 3),
        ("beta_1^3", 6 * p * (p - 1) - 6),
    )


def coker_j_torsion(p: int, k: int) -> GroupValue:
    """Torsion of pi_k of the p-complete cokernel-of-J spectrum, k in range."""
    _require_odd_prime(p)
    limit = coker_range_limit(p)
    if k > limit:
        raise OutOfValidatedRangeError("cokernel-of-J torsion table", limit, k, p)
    if any(k == deg for _, deg in coker_j_degrees(p)):
        return GroupValue.cyclic(p)
    return GroupValue.trivial()


def sphere_torsion(p: int, k: int) -> GroupValue:
    """p-torsion of pi_k S as image-of-J plus cokernel-of-J."""
    return direct_sum([image_of_j_torsion(p, k), coker_j_torsion(p, k)])


@dataclass(frozen=True)
class StemTableEntry:
    n: int
    torsion_of_s: TorsionGroup
    extra_2_torsion: GroupValue


def _load_table() -> dict[int, StemTableEntry]:
    raw = json.loads(
        resources.files("khs.data").joinpath("stem_table.json").read_text("utf-8")
    )
    table = {}
    for n_s, row in raw["rows"].items():
        n = int(n_s)
        sphere = group_value_from_json(row["sphere"])
        table[n] = StemTableEntry(
            n=n,
            torsion_of_s=sphere.group,
            extra_2_torsion=group_value_from_json(row["extra_two"]),
        )
    return table


_TABLE: dict[int, StemTableEntry] | None = None


def classical_stem_row(n: int) -> StemTableEntry:
    """Static stem data for 0 <= n <= 22: torsion of pi_n S plus the
    remaining 2-torsion of pi_n K(S) (order-only entries included)."""
    global _TABLE
    if _TABLE is None:
        _TABLE = _load_table()
    if not 0 <= n <= MAX_TABLE_DEGREE:
        raise OutOfValidatedRangeError("2-primary stem table", MAX_TABLE_DEGREE, n)
    return _TABLE[n]
