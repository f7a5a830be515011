"""p-primary structure of K(Z).

After p-completion, K(Z) splits off the image-of-J spectrum, and the
complement (4-connected, written Ktilde here) splits further into p-1
eigensummands y_0, ..., y_{p-2}.  What each summand is depends on
Bernoulli divisibility and the class-number condition on the real
cyclotomic subfield (the Kummer-Vandiver condition, verified far beyond
any prime this package will ever see but not known in general):

* y_0 is a shifted copy of the connective Adams summand (torsion free);
* y_1 and y_{p-2} vanish outright;
* odd i strictly between: y_i vanishes iff p does not divide the
  numerator of B_{i+1} (Herbrand-Ribet); when it survives, its
  even-degree homotopy is cyclic of order the p-part of B_{n+1}/(n+1)
  if the class-number condition holds, and otherwise only that order is
  known (Mazur-Wiles);
* even i > 0: torsion free under the condition, otherwise an unknown
  finite group conjectured to vanish.

The torsion of pi_n Ktilde collapses to: zero in odd degrees, zero in
degrees 4k under the condition, and Z_p-hat/(B_{2k+2}/(2k+2)) in degrees
4k+2, whose order is p^max(v, 0) for v the p-adic valuation of that
Bernoulli quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroups import GroupValue, direct_sum
from .errors import IndexOutOfRangeError, NotPrimeError, OutOfRangeError
from .numtheory import bernoulli_exact, bernoulli_mod, is_prime, kv_status, vp
from .stems import image_of_j_torsion

__all__ = [
    "Y_SUSPENDED_ELL",
    "Y_TRIVIAL",
    "Y_ODD_CYCLIC_TORSION",
    "Y_ODD_ORDER_ONLY",
    "Y_EVEN_FREE",
    "Y_EVEN_UNKNOWN_FINITE",
    "YSummandStatus",
    "y_status",
    "ktz_torsion",
    "kz_torsion",
]

Y_SUSPENDED_ELL = "suspended_ell"
Y_TRIVIAL = "trivial"
Y_ODD_CYCLIC_TORSION = "odd_cyclic_torsion"
Y_ODD_ORDER_ONLY = "odd_order_only"
Y_EVEN_FREE = "even_free"
Y_EVEN_UNKNOWN_FINITE = "even_unknown_finite"


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"expected an odd prime, got {p}")


@dataclass(frozen=True)
class YSummandStatus:
    p: int
    i: int
    status: str
    # for odd 1 < i < p-2 the deciding Bernoulli index, i+1
    bernoulli_index: int | None = None


def y_status(p: int, i: int, kv_bound: int | None = None) -> YSummandStatus:
    """Classify the i-th eigensummand of the K(Z) complement."""
    _require_odd_prime(p)
    if not 0 <= i <= p - 2:
        raise IndexOutOfRangeError(f"summand index must lie in 0..{p - 2}, got {i}")
    if i == 0:
        return YSummandStatus(p, 0, Y_SUSPENDED_ELL)
    if i == 1 or i == p - 2:
        return YSummandStatus(p, i, Y_TRIVIAL)
    kv = kv_status(p, kv_bound)
    if i % 2 == 1:
        if bernoulli_mod(i + 1, p) != 0:
            return YSummandStatus(p, i, Y_TRIVIAL, bernoulli_index=i + 1)
        status = Y_ODD_CYCLIC_TORSION if kv.holds else Y_ODD_ORDER_ONLY
        return YSummandStatus(p, i, status, bernoulli_index=i + 1)
    return YSummandStatus(p, i, Y_EVEN_FREE if kv.holds else Y_EVEN_UNKNOWN_FINITE)


def ktz_torsion(p: int, n: int, kv_bound: int | None = None) -> GroupValue:
    """p-torsion of pi_n of the 4-connected complement of j in K(Z)."""
    _require_odd_prime(p)
    if n < 1:
        raise OutOfRangeError(f"degree must be >= 1, got {n}")
    if n % 2 == 1 or n <= 4:
        return GroupValue.trivial()
    if n % 4 == 2:
        k = (n - 2) // 4
        quotient = bernoulli_exact(2 * k + 2) / (2 * k + 2)
        v = vp(quotient, p)
        if v <= 0:
            return GroupValue.trivial()
        if kv_status(p, kv_bound).holds:
            return GroupValue.cyclic(p, v)
        return GroupValue.order_only(
            p**v, note="order given by the Mazur-Wiles theorem; isomorphism "
            "type needs the real-cyclotomic class-number condition"
        )
    # n = 4k, k > 1: zero under the class-number condition, open above the
    # verified bound (and then conjectured to vanish)
    if kv_status(p, kv_bound).holds:
        return GroupValue.trivial()
    return GroupValue.conjecturally_zero(
        f"real-cyclotomic class-number condition unverified for p={p}"
    )


def kz_torsion(p: int, n: int, kv_bound: int | None = None) -> GroupValue:
    """p-torsion of pi_n K(Z): image-of-J part plus the complement."""
    _require_odd_prime(p)
    if n < 0:
        raise OutOfRangeError(f"degree must be >= 0, got {n}")
    j_part = image_of_j_torsion(p, n)
    if n == 0:
        return j_part
    return direct_sum([j_part, ktz_torsion(p, n, kv_bound)])
