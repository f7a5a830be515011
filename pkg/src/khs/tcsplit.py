"""Splitting bookkeeping for TC of the sphere and of the integers.

On homotopy groups, TC(S) after p-completion splits as

    pi_*(j) + pi_*(c) + pi_*(Sigma j) + pi_*(Sigma c) + pi_*(Sigma CPbar)

with j/c the image/cokernel of J and CPbar the reduced stunted projective
summand; its mod-torsion ranks are 1 in degree zero and odd degrees >= -1.

TC(Z) after p-completion splits as j, a suspended unit-group twin of j,
and p-1 shifted copies of the connective Adams summand indexed
0, p, 2, 3, ..., p-2 (the index 1 slot is renamed p); the copy with
index q is a (2q-1)-fold suspension, so it contributes a free rank in
degrees congruent to 2q-1 mod 2(p-1) from 2q-1 on, including degree -1
from index 0.

The trace from K(Z) is diagonal for these splittings: identity on j, and
the i-th eigensummand of the complement lands in the Adams copy paired
by ``trace_pairing`` (the (0, p) pair is a weak equivalence).  The
linearization facts recorded in LINEARIZATION_FACTS are what the main
assembly needs: in particular the stunted-projective summand maps to
zero on p-torsion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroups import GroupValue, HomotopyGroup, direct_sum
from .config import CALIBRATED
from .cpbar import cp_torsion
from .errors import IndexOutOfRangeError, NotPrimeError
from .numtheory import is_prime
from .stems import coker_j_torsion, image_of_j_torsion

__all__ = [
    "tc_s_torsion",
    "tc_s_free_rank",
    "tc_z_homotopy",
    "ltc_indices",
    "TracePairing",
    "trace_pairing",
    "EigenSquare",
    "eigensummand",
    "LINEARIZATION_FACTS",
]


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"expected an odd prime, got {p}")


def tc_s_torsion(p: int, n: int, cp_mode: str = CALIBRATED) -> GroupValue:
    """p-torsion of pi_n TC(S): the five-summand column sum."""
    _require_odd_prime(p)
    return direct_sum(
        [
            image_of_j_torsion(p, n),
            coker_j_torsion(p, n),
            image_of_j_torsion(p, n - 1),
            coker_j_torsion(p, n - 1),
            cp_torsion(p, n, cp_mode),
        ]
    )


def tc_s_free_rank(n: int) -> int:
    """Mod-torsion rank of pi_n TC(S): 1 in degree 0 and odd degrees >= -1."""
    return 1 if n == 0 or (n % 2 != 0 and n >= -1) else 0


def ltc_indices(p: int) -> tuple[int, ...]:
    """Adams-summand indices of TC(Z): 0, p, then 2..p-2 (1 is renamed p)."""
    _require_odd_prime(p)
    return (0, p) + tuple(range(2, p - 1))


def tc_z_homotopy(p: int, n: int) -> HomotopyGroup:
    """pi_n TC(Z) after p-completion, for n >= -1.

    Free rank: 1 from j at n = 0, 1 from the suspended unit twin at
    n = 1, and 1 for each Adams copy q with n >= 2q-1 and
    n = 2q-1 mod 2(p-1).  Torsion: the j and suspended-j parts only;
    the Adams copies are torsion free.
    """
    _require_odd_prime(p)
    if n < -1:
        raise ValueError(f"degree must be >= -1, got {n}")
    period = 2 * (p - 1)
    rank = (1 if n == 0 else 0) + (1 if n == 1 else 0)
    for q in ltc_indices(p):
        bottom = 2 * q - 1
        if n >= bottom and (n - bottom) % period == 0:
            rank += 1
    torsion = direct_sum([image_of_j_torsion(p, n), image_of_j_torsion(p, n - 1)])
    return HomotopyGroup(degree=n, free_rank=rank, torsion=torsion)


@dataclass(frozen=True)
class TracePairing:
    """Which Adams copy each eigensummand of the K(Z) complement hits.

    The map is a bijection from {0..p-2} onto the index set
    {p, 2, 3, ..., p-2, 0}: summand 0 goes to copy p (a weak
    equivalence), summand i to copy i+1 for 1 <= i <= p-3, and summand
    p-2 to copy 0.
    """

    p: int
    pairs: tuple[tuple[int, int], ...]
    weak_equivalence_pair: tuple[int, int] = (0, 0)

    def target(self, i: int) -> int:
        return dict(self.pairs)[i]


def trace_pairing(p: int) -> TracePairing:
    _require_odd_prime(p)
    pairs = [(0, p)] + [(i, i + 1) for i in range(1, p - 2)] + [(p - 2, 0)]
    return TracePairing(p=p, pairs=tuple(pairs), weak_equivalence_pair=(0, p))


# Facts about the linearization map TC(S) -> TC(Z) used by the assembly:
# the sphere summand factors through j and splits on homotopy; the
# suspended sphere summand factors through the suspended unit twin and
# splits; the stunted-projective summand is zero on p-torsion.
LINEARIZATION_FACTS = {
    "sphere_factors_through_j": True,
    "suspended_sphere_factors_through_unit_twin": True,
    "cpbar_zero_on_torsion": True,
}


@dataclass(frozen=True)
class EigenSquare:
    """Corners of one of the p-1 homotopy-cartesian squares splitting the
    trace square, as summand-name descriptors (upper left is the K(S)
    eigensummand)."""

    p: int
    i: int
    upper_left: tuple[str, ...]
    upper_right: tuple[str, ...]
    lower_left: tuple[str, ...]
    lower_right: tuple[str, ...]
    upper_right_is_weak_equivalence_onto_ltc: bool = False
    simplification: tuple[str, ...] = field(default=())


def eigensummand(p: int, i: int) -> EigenSquare:
    """Descriptor for the i-th eigensquare; index 1 carries the known
    simplification of its K(S) corner as Sigma c wedge an unstunted
    projective piece."""
    _require_odd_prime(p)
    if not 0 <= i <= p - 2:
        raise IndexOutOfRangeError(f"summand index must lie in 0..{p - 2}, got {i}")
    if i == 0:
        return EigenSquare(
            p,
            0,
            upper_left=("K(0)",),
            upper_right=("j",),
            lower_left=("S", "SCPm1[-1]"),
            lower_right=("j", "S^-1 lTC(0)"),
        )
    if i == 1:
        return EigenSquare(
            p,
            1,
            upper_left=("K(1)",),
            upper_right=("y(0)",),
            lower_left=("SCPm1[0]",),
            lower_right=("Sj", f"S^-1 lTC({p})"),
            upper_right_is_weak_equivalence_onto_ltc=True,
            simplification=("Sc", f"CPinf[{p - 1}]"),
        )
    return EigenSquare(
        p,
        i,
        upper_left=(f"K({i})",),
        upper_right=(f"y({i})",),
        lower_left=(f"SCPm1[{i - 1}]",),
        lower_right=(f"S^-1 lTC({i})",),
    )
