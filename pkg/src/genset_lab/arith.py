"""Number-theoretic primitives: factorization, omega counts, primitive prime
divisors and the prime-counting function.

Everything here works on plain Python integers; inputs are small enough for
trial division and a sieve.
"""

from __future__ import annotations

import math

# Largest p**i accepted by zsigmondy_ppd before we refuse rather than grind
# through trial division of a huge cofactor.
PPD_CAP = 2**63


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs.

    factorize(1) == [].
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def omega(n: int) -> int:
    """Number of distinct prime divisors of n."""
    return len(factorize(n))


def big_omega(n: int) -> int:
    """Number of prime divisors of n counted with multiplicity."""
    return sum(e for _, e in factorize(n))


def binary_ones(n: int) -> int:
    """Popcount: number of ones in the binary expansion of n >= 1."""
    if n < 1:
        raise ValueError(f"binary_ones requires n >= 1, got {n}")
    return n.bit_count()


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (small n only)."""
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def zsigmondy_ppd(p: int, i: int) -> int | None:
    """Smallest primitive prime divisor of p**i - 1, or None if none exists.

    A primitive prime divisor is a prime dividing p**i - 1 but no p**k - 1
    with 1 <= k < i. Raises ValueError when p**i exceeds PPD_CAP.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if p**i > PPD_CAP:
        raise ValueError(f"p**i = {p}**{i} exceeds cap {PPD_CAP}")
    target = p**i - 1
    if target == 0:
        return None
    for q, _ in factorize(target):
        if all((p**k - 1) % q != 0 for k in range(1, i)):
            return q
    return None


def prime_pi(n: int) -> int:
    """Number of primes <= n, by sieve of Eratosthenes."""
    if n < 1:
        raise ValueError(f"prime_pi requires n >= 1, got {n}")
    if n < 2:
        return 0
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, math.isqrt(n) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return sum(sieve)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out
