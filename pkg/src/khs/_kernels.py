"""Modular Bernoulli-number kernels.

The irregular-prime scan needs the residues of all even-index Bernoulli
numbers B_2, B_4, ..., B_{p-3} modulo p for many primes p.  Computing the
exact rationals for that is hopeless (their numerators grow super
exponentially), so both kernels here work with the even part of the
generating function t/(e^t - 1) reduced mod p:

    (t/2) coth(t/2) = sum_{n>=0} B_{2n} t^{2n} / (2n)!

Substituting u = (t/2)^2 turns the right side into the quotient of two
short power series, cosh-type over sinh-type:

    h(u) / g(u),  h(u) = sum u^n/(2n)!,  g(u) = sum u^n/(2n+1)!

One series division of length (p-3)/2 over F_p then yields every needed
residue at once.  All factorials involved have index < p, so they are
invertible mod p (equivalently: von Staudt-Clausen guarantees p does not
divide the denominator of B_k for even k <= p-3).

Two interchangeable implementations are provided: a numba-compiled loop
(the default when numba imports) and a vectorized numpy fallback.  Set
KHS_KERNEL=numpy or KHS_KERNEL=numba to force one; the two are
bit-identical on their common domain, which the test suite asserts.

Validity bound: intermediate products are held in int64 with reduction
every 2048 terms, which is safe for p < 2**26.  Scans in this package
stay far below that.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["bernoulli_even_mod_vector", "active_backend", "available_backends"]

_REDUCE_EVERY = 2048  # int64 safety: p^2 * 2048 < 2**63 for p < 2**26
_MAX_KERNEL_PRIME = 1 << 26


def _numpy_factorial_tables(p: int, top: int):
    """fact[i] = i! mod p and invfact[i] = (i!)^-1 mod p for i <= top (top < p)."""
    fact = np.empty(top + 1, dtype=np.int64)
    fact[0] = 1
    for i in range(1, top + 1):
        fact[i] = fact[i - 1] * i % p
    invfact = np.empty(top + 1, dtype=np.int64)
    invfact[top] = pow(int(fact[top]), p - 2, p)
    for i in range(top, 0, -1):
        invfact[i - 1] = invfact[i] * i % p
    return fact, invfact


def _bernoulli_even_mod_numpy(p: int) -> np.ndarray:
    m = (p - 3) // 2
    fact, invfact = _numpy_factorial_tables(p, 2 * m + 1)
    g = invfact[3 : 2 * m + 2 : 2].copy()  # g[i-1] = 1/(2i+1)!, i = 1..m
    h = invfact[2 : 2 * m + 1 : 2].copy()  # h[n-1] = 1/(2n)!,  n = 1..m
    c = np.empty(m + 1, dtype=np.int64)
    c[0] = 1
    for n in range(1, m + 1):
        rev = c[:n][::-1]
        acc = 0
        # chunked dot keeps partial sums below 2**63 for p < 2**26
        for start in range(0, n, _REDUCE_EVERY):
            stop = min(start + _REDUCE_EVERY, n)
            acc = (acc + int(np.dot(g[start:stop], rev[start:stop]))) % p
        c[n] = (int(h[n - 1]) - acc) % p
    inv4 = pow(4, p - 2, p)
    out = np.empty(m + 1, dtype=np.int64)
    pw = 1
    for n in range(m + 1):
        out[n] = int(c[n]) * int(fact[2 * n]) % p * pw % p
        pw = pw * inv4 % p
    return out


def _build_numba_impl():
    from numba import njit

    @njit("int64(int64, int64, int64)", nogil=True, cache=True)
    def _powmod(b, e, m):
        r = 1
        b %= m
        while e > 0:
            if e & 1:
                r = r * b % m
            b = b * b % m
            e >>= 1
        return r

    @njit("int64[:](int64)", nogil=True, cache=True)
    def _bernoulli_even_mod_numba(p):
        m = (p - 3) // 2
        top = 2 * m + 1
        fact = np.empty(top + 1, dtype=np.int64)
        fact[0] = 1
        for i in range(1, top + 1):
            fact[i] = fact[i - 1] * i % p
        invfact = np.empty(top + 1, dtype=np.int64)
        invfact[top] = _powmod(fact[top], p - 2, p)
        for i in range(top, 0, -1):
            invfact[i - 1] = invfact[i] * i % p
        c = np.empty(m + 1, dtype=np.int64)
        c[0] = 1
        for n in range(1, m + 1):
            acc = 0
            pending = 0
            for i in range(1, n + 1):
                acc += invfact[2 * i + 1] * c[n - i]
                pending += 1
                if pending == 2048:
                    acc %= p
                    pending = 0
            c[n] = (invfact[2 * n] - acc % p) % p
        inv4 = _powmod(4, p - 2, p)
        out = np.empty(m + 1, dtype=np.int64)
        pw = 1
        for n in range(m + 1):
            out[n] = c[n] * fact[2 * n] % p * pw % p
            pw = pw * inv4 % p
        return out

    return _bernoulli_even_mod_numba


_IMPLS: dict[str, object] = {}


def available_backends() -> tuple[str, ...]:
    names = ["numpy"]
    try:
        import numba  # noqa: F401

        names.insert(0, "numba")
    except ImportError:
        pass
    return tuple(names)


def _resolve_backend() -> str:
    forced = os.environ.get("KHS_KERNEL", "").strip().lower()
    if forced:
        if forced not in ("numba", "numpy"):
            raise ValueError(f"KHS_KERNEL must be 'numba' or 'numpy', got {forced!r}")
        return forced
    return available_backends()[0]


def _get_impl(name: str):
    if name not in _IMPLS:
        if name == "numba":
            _IMPLS[name] = _build_numba_impl()
        else:
            _IMPLS[name] = _bernoulli_even_mod_numpy
    return _IMPLS[name]


def active_backend() -> str:
    """Backend the next kernel call will use ('numba' or 'numpy')."""
    return _resolve_backend()


def bernoulli_even_mod_vector(p: int, backend: str | None = None) -> np.ndarray:
    """Residues v with v[n] = B_{2n} mod p for 0 <= n <= (p-3)/2.

    p must be an odd prime >= 5 (callers validate primality); p = 3 gives
    an empty range and is handled by the caller.  ``backend`` overrides
    the KHS_KERNEL selection for benchmarking.
    """
    if p >= _MAX_KERNEL_PRIME:
        raise ValueError(f"modular kernel is validated only for p < 2**26, got {p}")
    impl = _get_impl(backend or _resolve_backend())
    return impl(p)
