"""Exact rational arithmetic, Bernoulli numbers, and prime classification.

Bernoulli numbers follow the generating function t/(e^t - 1), which fixes
B_1 = -1/2; all other odd-index values vanish.  The exact path is the
binomial recurrence over even indices, memoized in memory and optionally
persisted to a small TSV cache (B_n near index 1000 takes seconds and
near 2000 minutes, so recomputation across runs is worth avoiding).

A prime p is regular when it divides no numerator among B_2, ..., B_{p-3};
testing that via exact values would need B_k for k up to p, so the scan
path works mod p throughout (see _kernels).  The two paths agree bit for
bit wherever both are defined, which the test suite checks against the
exact oracle.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from pathlib import Path

from . import _kernels
from .config import DEFAULT_KV_BOUND
from .errors import (
    EvenPrimeError,
    NotPrimeError,
    OutOfRangeError,
    ZeroInputError,
)

__all__ = [
    "is_prime",
    "primes_below",
    "vp",
    "bernoulli_exact",
    "bernoulli_mod",
    "irregular_indices",
    "IrregularReport",
    "scan_irregular",
    "prime_factors",
    "kv_status",
    "KVStatus",
    "KV_HOLDS",
    "KV_UNKNOWN",
    "set_bernoulli_cache_path",
    "bernoulli_cache_entries",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs.

    The witness set {2, 3, ..., 37} is known to be sound below
    3.3 * 10^24, far past the 64-bit range this package promises.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(limit: int) -> list[int]:
    """All primes < limit by sieve."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit) if sieve[i]]


def prime_factors(n: int) -> set[int]:
    """Distinct prime factors of |n| (Pollard rho past trial division)."""
    n = abs(n)
    out: set[int] = set()
    for q in (2, 3, 5, 7, 11, 13):
        while n % q == 0:
            out.add(q)
            n //= q
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out.add(m)
            continue
        d = _pollard_rho(m)
        stack += [d, m // d]
    return out


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _require_odd_prime(p: int) -> None:
    if p == 2:
        raise EvenPrimeError("p = 2: only odd primes are supported here")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def vp(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ZeroInputError("the p-adic valuation of 0 is undefined")

    def _ival(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _ival(abs(x.numerator)) - _ival(x.denominator)


# ---------------------------------------------------------------------------
# Exact Bernoulli numbers with a persistent memo cache
# ---------------------------------------------------------------------------


def _von_staudt_clausen_denominator(n: int) -> int:
    """Denominator of B_n for even n >= 2: the product of primes q with (q-1) | n."""
    den = 1
    for q in primes_below(n + 2):
        if n % (q - 1) == 0:
            den *= q
    return den


class _BernoulliCache:
    """Memo for B_n keyed by n, with optional TSV persistence.

    File format: one record per line, ``n<TAB>num<TAB>den``, ascending n,
    no duplicates.  Writes go through a temp file and an atomic rename so
    concurrent readers never observe a partial entry; in-process writers
    are serialized by a lock.  Loaded even-index entries are checked
    against the von Staudt-Clausen denominator and the whole file is
    discarded on any mismatch or parse error.
    """

    def __init__(self, path: Path | None):
        self.path = path
        self._lock = threading.RLock()
        self._values: dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}
        self._max_even = 0
        self._loaded = False
        self._dirty = False

    def _load(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        if self.path is None or not self.path.exists():
            return
        try:
            entries: dict[int, Fraction] = {}
            prev = -1
            with open(self.path, encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if not line:
                        continue
                    n_s, num_s, den_s = line.split("\t")
                    n, num, den = int(n_s), int(num_s), int(den_s)
                    if n <= prev or den < 1 or gcd(abs(num), den) != 1:
                        raise ValueError("cache records out of order or unreduced")
                    if n >= 2 and n % 2 == 0 and den != _von_staudt_clausen_denominator(n):
                        raise ValueError(f"cache entry for n={n} fails the denominator check")
                    prev = n
                    entries[n] = Fraction(num, den)
        except (ValueError, OSError):
            return  # unreadable or corrupt: recompute from scratch
        self._values.update(entries)
        evens = [n for n in entries if n >= 2 and n % 2 == 0]
        # only a gap-free even prefix lets the recurrence resume mid-stream
        run = 0
        for n in sorted(evens):
            if n == run + 2:
                run = n
            else:
                break
        self._max_even = run

    def get(self, n: int) -> Fraction:
        with self._lock:
            self._load()
            if n <= self._max_even or n <= 1:
                if n % 2 == 1 and n > 1:
                    return Fraction(0)
                return self._values[n]
            if n % 2 == 1:
                return Fraction(0)
            self._extend(n)
            if self._dirty:
                self._save()
            return self._values[n]

    def _extend(self, n: int) -> None:
        # sum_{r<=m} C(m+1, r) B_r = 0 for m >= 1; odd r > 1 contribute nothing
        values = self._values
        for m in range(self._max_even + 2, n + 1, 2):
            s = Fraction(m + 1, -2)  # the r = 1 term, C(m+1,1) * B_1
            for r in range(0, m, 2):
                s += comb(m + 1, r) * values[r]
            values[m] = -s / (m + 1)
        self._max_even = n if n % 2 == 0 else n - 1
        self._dirty = True

    def _save(self) -> None:
        if self.path is None:
            self._dirty = False
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_name(self.path.name + f".tmp{os.getpid()}")
        with open(tmp, "w", encoding="utf-8") as f:
            for n in sorted(self._values):
                v = self._values[n]
                f.write(f"{n}\t{v.numerator}\t{v.denominator}\n")
        os.replace(tmp, self.path)
        self._dirty = False

    def entries(self) -> dict[int, Fraction]:
        with self._lock:
            self._load()
            return dict(self._values)


def _cache_path_from_env() -> Path | None:
    env = os.environ.get("KHS_CACHE")
    if env:
        return Path(env)
    return Path(os.path.expanduser("~/.cache/khs/bernoulli.tsv"))


_cache = _BernoulliCache(_cache_path_from_env())


def set_bernoulli_cache_path(path: Path | str | None) -> None:
    """Point the memo cache at ``path`` (None disables persistence)."""
    global _cache
    _cache = _BernoulliCache(Path(path) if path is not None else None)


def bernoulli_cache_entries() -> dict[int, Fraction]:
    return _cache.entries()


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact reduced fraction (B_0 = 1, B_1 = -1/2, B_12 = -691/2730)."""
    if n < 0:
        raise OutOfRangeError("Bernoulli numbers are indexed by n >= 0")
    return _cache.get(n)


# ---------------------------------------------------------------------------
# Fast mod-p path and prime classification
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _even_residues(p: int):
    return _kernels.bernoulli_even_mod_vector(p)


def bernoulli_mod(k: int, p: int) -> int:
    """B_k mod p for even k in [2, p-3], without exact rationals.

    von Staudt-Clausen guarantees p does not divide the denominator of
    B_k in this range, so the residue is well defined.  Bit-equal to
    ``bernoulli_exact(k) mod p`` wherever both are affordable.
    """
    _require_odd_prime(p)
    if k % 2 != 0 or not 2 <= k <= p - 3:
        raise OutOfRangeError(
            f"bernoulli_mod needs even k with 2 <= k <= p-3; got k={k}, p={p}"
        )
    return int(_even_residues(p)[k // 2])


@dataclass(frozen=True)
class IrregularReport:
    """Indices of the even Bernoulli numbers a prime divides."""

    p: int
    indices: tuple[int, ...]

    @property
    def is_regular(self) -> bool:
        return not self.indices


def irregular_indices(p: int) -> IrregularReport:
    """Even k in [2, p-3] with p | numerator(B_k); empty iff p is regular."""
    _require_odd_prime(p)
    if p == 3:
        return IrregularReport(3, ())
    residues = _even_residues(p)
    idx = tuple(2 * n for n in range(1, (p - 3) // 2 + 1) if residues[n] == 0)
    return IrregularReport(p, idx)


def scan_irregular(max_p: int, jobs: int = 1) -> list[IrregularReport]:
    """IrregularReport for every odd prime p <= max_p, ascending.

    The scan is embarrassingly parallel over primes and the kernels
    release the GIL, so ``jobs`` threads give near-linear speedup; the
    output is deterministic regardless of jobs.
    """
    if max_p < 3:
        raise OutOfRangeError(f"scan needs max_p >= 3, got {max_p}")
    ps = [p for p in primes_below(max_p + 1) if p != 2]
    if jobs <= 1:
        return [irregular_indices(p) for p in ps]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(irregular_indices, ps))


KV_HOLDS = "holds"
KV_UNKNOWN = "unknown_above_verified_bound"


@dataclass(frozen=True)
class KVStatus:
    """Whether p is known not to divide the class number of Q(zeta_p + zeta_p^-1)."""

    p: int
    status: str
    verified_bound: int

    @property
    def holds(self) -> bool:
        return self.status == KV_HOLDS


def kv_status(p: int, verified_bound: int | None = None) -> KVStatus:
    """Verified-by-bound check; no algorithm decides this from Bernoulli data."""
    _require_odd_prime(p)
    bound = DEFAULT_KV_BOUND if verified_bound is None else verified_bound
    status = KV_HOLDS if p <= bound else KV_UNKNOWN
    return KVStatus(p, status, bound)
