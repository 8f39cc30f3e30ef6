import math

import pytest
from hypothesis import given, strategies as st

from genset_lab.arith import (
    big_omega,
    binary_ones,
    factorize,
    is_prime,
    omega,
    p_part,
    prime_pi,
    zsigmondy_ppd,
)


def test_factorize_small():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(97) == [(97, 1)]
    assert factorize(262080) == [(2, 6), (3, 2), (5, 1), (7, 1), (13, 1)]


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_roundtrip(n):
    fact = factorize(n)
    prod = 1
    for p, e in fact:
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    # ascending primes
    assert [p for p, _ in fact] == sorted(p for p, _ in fact)


def test_omega_and_big_omega():
    assert omega(1) == 0 and big_omega(1) == 0
    assert omega(12) == 2 and big_omega(12) == 3
    assert omega(30) == 3 and big_omega(30) == 3
    assert omega(64) == 1 and big_omega(64) == 6


def test_binary_ones():
    assert [binary_ones(n) for n in (1, 2, 3, 4, 8, 255)] == [1, 1, 2, 1, 1, 8]


def test_p_part():
    assert p_part(720, 2) == 16
    assert p_part(720, 3) == 9
    assert p_part(720, 7) == 1


def test_prime_pi():
    assert prime_pi(1) == 0
    assert prime_pi(2) == 1
    assert prime_pi(54) == 16
    assert prime_pi(100) == 25
    assert prime_pi(1000) == 168


def test_prime_pi_vs_log():
    for n in (54, 100, 1000, 10**5):
        assert prime_pi(n) > n / math.log(n)


def test_zsigmondy_basic():
    # 2^4 - 1 = 15: 5 divides it but not 2^k - 1 for k < 4
    assert zsigmondy_ppd(2, 4) == 5
    assert zsigmondy_ppd(2, 6) is None  # 63 = 3^2 * 7, both non-primitive
    assert zsigmondy_ppd(2, 12) == 13
    assert zsigmondy_ppd(3, 2) is None  # 8 = 2^3
    assert zsigmondy_ppd(7, 2) is None  # 48 = 2^4 * 3


def test_zsigmondy_definition():
    for p, i in [(2, 5), (3, 4), (5, 3), (7, 4)]:
        q = zsigmondy_ppd(p, i)
        assert q is not None
        assert (p**i - 1) % q == 0
        for k in range(1, i):
            assert (p**k - 1) % q != 0


@given(st.sampled_from([2, 3, 5, 7]), st.integers(min_value=2, max_value=12))
def test_zsigmondy_exceptions_sweep(p, i):
    exceptions = {(2, 6), (3, 2), (7, 2)}
    got = zsigmondy_ppd(p, i)
    if (p, i) in exceptions:
        assert got is None
    else:
        assert got is not None


def test_zsigmondy_cap():
    with pytest.raises(ValueError):
        zsigmondy_ppd(2, 500)
