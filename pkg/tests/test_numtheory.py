from __future__ import annotations

from fractions import Fraction

import pytest

from khs import numtheory
from khs.errors import (
    EvenPrimeError,
    NotPrimeError,
    OutOfRangeError,
    ZeroInputError,
)
from khs.numtheory import (
    bernoulli_exact,
    bernoulli_mod,
    irregular_indices,
    is_prime,
    kv_status,
    prime_factors,
    primes_below,
    scan_irregular,
    vp,
)

from .oracles import bernoulli_akiyama_tanigawa


def test_is_prime_matches_sieve():
    sieve = set(primes_below(10_000))
    for n in range(10_000):
        assert is_prime(n) == (n in sieve)


def test_is_prime_large_64bit():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**62 - 1)
    assert is_prime(2147483659)  # first prime above 2^31


def test_prime_factors():
    assert prime_factors(1) == set()
    assert prime_factors(-691) == {691}
    assert prime_factors(32760) == {2, 3, 5, 7, 13}
    assert prime_factors(2**61 - 1) == {2**61 - 1}


def test_bernoulli_small_values():
    assert bernoulli_exact(0) == Fraction(1)
    assert bernoulli_exact(1) == Fraction(-1, 2)  # the generating-function convention
    assert bernoulli_exact(2) == Fraction(1, 6)
    assert bernoulli_exact(12) == Fraction(-691, 2730)


def test_bernoulli_negative_index_rejected():
    with pytest.raises(OutOfRangeError):
        bernoulli_exact(-1)


def test_bernoulli_odd_indices_vanish():
    for n in range(3, 200, 2):
        assert bernoulli_exact(n) == 0


def test_bernoulli_against_independent_oracle():
    oracle = bernoulli_akiyama_tanigawa(60)
    for n in range(61):
        assert bernoulli_exact(n) == oracle[n], n


def test_von_staudt_clausen_denominators():
    for n in range(2, 101, 2):
        expected = 1
        for q in primes_below(n + 2):
            if n % (q - 1) == 0:
                expected *= q
        assert bernoulli_exact(n).denominator == expected, n


def test_vp_examples():
    assert vp(Fraction(-691, 32760), 691) == 1  # B_12 / 12
    assert vp(Fraction(1, 252), 3) == -2
    assert vp(9, 3) == 2
    assert vp(Fraction(10, 3), 5) == 1
    with pytest.raises(ZeroInputError):
        vp(Fraction(0), 3)
    with pytest.raises(NotPrimeError):
        vp(Fraction(1, 2), 6)


def test_bernoulli_mod_examples():
    assert bernoulli_mod(32, 37) == 0
    assert bernoulli_mod(12, 691) == 0
    assert bernoulli_mod(2, 5) == 1  # B_2 = 1/6, and 6^-1 = 1 mod 5


def test_bernoulli_mod_validation():
    with pytest.raises(OutOfRangeError):
        bernoulli_mod(3, 37)  # odd index
    with pytest.raises(OutOfRangeError):
        bernoulli_mod(36, 37)  # above p-3
    with pytest.raises(OutOfRangeError):
        bernoulli_mod(0, 37)
    with pytest.raises(NotPrimeError):
        bernoulli_mod(2, 9)
    with pytest.raises(EvenPrimeError):
        bernoulli_mod(2, 2)


def test_bernoulli_mod_agrees_with_exact_reduction():
    for p in [5, 7, 11, 13, 37, 59, 61]:
        for k in range(2, p - 2, 2):
            b = bernoulli_exact(k)
            expected = b.numerator * pow(b.denominator, -1, p) % p
            assert bernoulli_mod(k, p) == expected, (k, p)


def test_irregular_small_primes_regular():
    for p in (3, 5, 7, 11, 13):
        assert irregular_indices(p).is_regular


def test_irregular_37_and_691():
    r = irregular_indices(37)
    assert not r.is_regular and r.indices == (32,)
    assert 12 in irregular_indices(691).indices


def test_irregular_validation():
    with pytest.raises(NotPrimeError):
        irregular_indices(15)
    with pytest.raises(EvenPrimeError):
        irregular_indices(2)


def test_scan_irregular_deterministic_across_jobs():
    seq = scan_irregular(200, jobs=1)
    par = scan_irregular(200, jobs=4)
    assert seq == par
    assert [r.p for r in seq] == [p for p in primes_below(201) if p != 2]
    with pytest.raises(OutOfRangeError):
        scan_irregular(2)


def test_kv_status():
    assert kv_status(3).holds  # regular primes satisfy the condition
    assert kv_status(691).holds
    above = kv_status(101, verified_bound=100)
    assert not above.holds and above.status == numtheory.KV_UNKNOWN
    with pytest.raises(NotPrimeError):
        kv_status(9)


def test_cache_roundtrip(tmp_path, isolated_bernoulli_cache):
    path = tmp_path / "cache.tsv"
    numtheory.set_bernoulli_cache_path(path)
    try:
        assert bernoulli_exact(20) == Fraction(-174611, 330)
        content = path.read_text().splitlines()
        # ascending n, tab-separated, no duplicates
        ns = [int(line.split("\t")[0]) for line in content]
        assert ns == sorted(set(ns))
        assert "12\t-691\t2730" in content

        # a fresh instance should resume from the file without recomputing
        numtheory.set_bernoulli_cache_path(path)
        assert bernoulli_exact(20) == Fraction(-174611, 330)
        assert bernoulli_exact(22) == Fraction(854513, 138)
    finally:
        numtheory.set_bernoulli_cache_path(isolated_bernoulli_cache)


def test_cache_rejects_corrupt_file(tmp_path, isolated_bernoulli_cache):
    path = tmp_path / "cache.tsv"
    path.write_text("2\t9\t9\n")  # unreduced, and fails the denominator check
    numtheory.set_bernoulli_cache_path(path)
    try:
        assert bernoulli_exact(2) == Fraction(1, 6)  # recomputed, not trusted
    finally:
        numtheory.set_bernoulli_cache_path(isolated_bernoulli_cache)
