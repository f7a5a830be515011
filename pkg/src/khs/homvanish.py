"""Vanishing certificates for stable hom-sets between Adams-summand cells.

Everything here is one-directional: the engine either certifies that a
hom-set [X, Y] in the p-complete stable category is zero by quoting one
of five cell-level vanishing ranges and unwinding wedges and cofiber
sequences, or it abstains with NOT_DETERMINED.  It never claims a hom-set
is nonzero, and it never guesses: a verdict of zero always carries a
trace, one line per rule application, suitable for audit.

Cell rules, for l the connective Adams summand and j the image of J,
with q the relative shift:

    [l, S^q l] = 0   if q != 0 mod 2p-2 and q < 2(2p-2)
    [j, S^q l] = 0   if q != 0 mod 2p-2 and q < 2(2p-2)
    [S^q l, j] = 0   if q != -1 mod 2p-2 and q >= -(2p-2)
    [S^-1 l, j] = 0
    [j, S j] = 0 and [S j, j] = 0

Composite rules: a finite wedge vanishes into (or out of) Y iff every
part does; for a cofiber C of A -> B, the three-term exact sequences
[X,B] -> [X,C] -> [X,SA] and [SA,Y] -> [C,Y] -> [B,Y] give zero whenever
both outer terms are certified zero.

The boundary case q = 2(2p-2) on the first rule only gives injectivity,
not vanishing, so the engine deliberately treats it as undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import NotPrimeError
from .numtheory import is_prime

__all__ = [
    "ZERO",
    "NOT_DETERMINED",
    "Cell",
    "Wedge",
    "Cofiber",
    "ell",
    "jay",
    "shifted",
    "hom_cell",
    "hom_formal",
    "hom_formal_trace",
    "x_model",
    "y_model",
    "ktz_model",
    "certify_section_claims",
    "ClaimResult",
]

ZERO = "zero"
NOT_DETERMINED = "not_determined"

ELL = "ell"
JAY = "j"


@dataclass(frozen=True)
class Cell:
    base: str  # "ell" or "j"
    shift: int = 0

    def __str__(self):
        return f"S^{self.shift} {self.base}" if self.shift else self.base


@dataclass(frozen=True)
class Wedge:
    parts: tuple["Formal", ...] = ()

    def __str__(self):
        return "(" + " v ".join(map(str, self.parts)) + ")" if self.parts else "*"


@dataclass(frozen=True)
class Cofiber:
    source: "Formal"
    target: "Formal"

    def __str__(self):
        return f"cofib({self.source} -> {self.target})"


Formal = Union[Cell, Wedge, Cofiber]


def ell(shift: int = 0) -> Cell:
    return Cell(ELL, shift)


def jay(shift: int = 0) -> Cell:
    return Cell(JAY, shift)


def shifted(x: Formal, k: int) -> Formal:
    if isinstance(x, Cell):
        return Cell(x.base, x.shift + k)
    if isinstance(x, Wedge):
        return Wedge(tuple(shifted(part, k) for part in x.parts))
    return Cofiber(shifted(x.source, k), shifted(x.target, k))


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"expected an odd prime, got {p}")


def hom_cell(x: Cell, y: Cell, p: int) -> str:
    """Verdict for [x, y] from the five cell rules alone."""
    _require_odd_prime(p)
    period = 2 * p - 2
    if x.base == ELL and y.base == ELL:
        q = y.shift - x.shift
        if q % period != 0 and q < 2 * period:
            return ZERO
        return NOT_DETERMINED
    if x.base == JAY and y.base == ELL:
        q = y.shift - x.shift
        if q % period != 0 and q < 2 * period:
            return ZERO
        return NOT_DETERMINED
    if x.base == ELL and y.base == JAY:
        q = x.shift - y.shift
        if q == -1:
            return ZERO
        if q % period != period - 1 and q >= -period:
            return ZERO
        return NOT_DETERMINED
    # j against j
    q = y.shift - x.shift
    return ZERO if q in (1, -1) else NOT_DETERMINED


def _hom(x: Formal, y: Formal, p: int, trace: list[str]) -> str:
    if isinstance(x, Wedge):
        if not x.parts:
            trace.append(f"[{x}, {y}] = 0: trivial source")
            return ZERO
        trace.append(f"[{x}, {y}]: wedge source, check each part")
        for part in x.parts:
            if _hom(part, y, p, trace) == NOT_DETERMINED:
                return NOT_DETERMINED
        return ZERO
    if isinstance(y, Wedge):
        if not y.parts:
            trace.append(f"[{x}, {y}] = 0: trivial target")
            return ZERO
        trace.append(f"[{x}, {y}]: finite wedge target, check each part")
        for part in y.parts:
            if _hom(x, part, p, trace) == NOT_DETERMINED:
                return NOT_DETERMINED
        return ZERO
    if isinstance(x, Cofiber):
        trace.append(
            f"[{x}, {y}]: exact sequence [S({x.source}), -] -> [cofib, -] -> [{x.target}, -]"
        )
        if _hom(shifted(x.source, 1), y, p, trace) == ZERO and _hom(x.target, y, p, trace) == ZERO:
            return ZERO
        return NOT_DETERMINED
    if isinstance(y, Cofiber):
        trace.append(
            f"[{x}, {y}]: exact sequence [-, {y.target}] -> [-, cofib] -> [-, S({y.source})]"
        )
        if _hom(x, y.target, p, trace) == ZERO and _hom(x, shifted(y.source, 1), p, trace) == ZERO:
            return ZERO
        return NOT_DETERMINED
    verdict = hom_cell(x, y, p)
    marker = "0" if verdict == ZERO else "not determined"
    trace.append(f"[{x}, {y}] = {marker}: cell rule at p={p}")
    return verdict


def hom_formal(x: Formal, y: Formal, p: int) -> str:
    _require_odd_prime(p)
    return _hom(x, y, p, [])


def hom_formal_trace(x: Formal, y: Formal, p: int) -> tuple[str, tuple[str, ...]]:
    """Verdict together with the audit trace (one line per rule applied)."""
    _require_odd_prime(p)
    trace: list[str] = []
    verdict = _hom(x, y, p, trace)
    return verdict, tuple(trace)


# ---------------------------------------------------------------------------
# Models of the TC(Z) and K(Z) summands, and the claims they must satisfy
# ---------------------------------------------------------------------------


def x_model(p: int, i: int) -> Formal:
    """The i-th TC(Z) summand block: x(0) = j v S^-1 l, x(1) = Sj v S^(2p-1) l,
    x(i) = S^(2i-1) l for 2 <= i <= p-2."""
    if i == 0:
        return Wedge((jay(0), ell(-1)))
    if i == 1:
        return Wedge((jay(1), ell(2 * p - 1)))
    return ell(2 * i - 1)


def y_model(p: int, i: int, copies: int = 1) -> Formal:
    """The i-th eigensummand of the K(Z) complement: a shifted Adams cell
    at i = 0, trivial at i = 1 and i = p-2, and otherwise the cofiber of a
    self-map of a finite wedge of S^(2i) l."""
    if i == 0:
        return ell(2 * p - 1)
    if i == 1 or i == p - 2:
        return Wedge(())
    block = Wedge(tuple(ell(2 * i) for _ in range(copies))) if copies != 1 else ell(2 * i)
    return Cofiber(block, block)


def ktz_model(p: int, copies: int = 1) -> Formal:
    return Wedge(tuple(y_model(p, i, copies) for i in range(p - 1)))


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    verdict: str
    trace: tuple[str, ...]


def certify_section_claims(p: int) -> tuple[ClaimResult, ...]:
    """Certify, from the cell rules alone, every pairwise-vanishing claim
    the splittings rest on: [x(i), x(i')] = 0 and [y_i, y_i'] = 0 for
    i != i', and [j, Ktilde] = 0 = [Ktilde, j]."""
    _require_odd_prime(p)
    results: list[ClaimResult] = []
    for i in range(p - 1):
        for i2 in range(p - 1):
            if i == i2:
                continue
            verdict, trace = hom_formal_trace(x_model(p, i), x_model(p, i2), p)
            results.append(ClaimResult(f"[x({i}), x({i2})] = 0 at p={p}", verdict, trace))
    for i in range(p - 1):
        for i2 in range(p - 1):
            if i == i2:
                continue
            verdict, trace = hom_formal_trace(y_model(p, i), y_model(p, i2), p)
            results.append(ClaimResult(f"[y({i}), y({i2})] = 0 at p={p}", verdict, trace))
    ktz = ktz_model(p)
    verdict, trace = hom_formal_trace(jay(0), ktz, p)
    results.append(ClaimResult(f"[j, Ktilde(Z)] = 0 at p={p}", verdict, trace))
    verdict, trace = hom_formal_trace(ktz, jay(0), p)
    results.append(ClaimResult(f"[Ktilde(Z), j] = 0 at p={p}", verdict, trace))
    return tuple(results)
