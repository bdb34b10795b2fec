"""Small number-theory helpers shared across the package.

Kept local (rather than pulling in sympy) so the CLI starts fast; every
function here is a few lines and only ever sees small arguments, except
the smallest-prime-factor sieve which is sized by its caller.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization [(p, exponent), ...] by trial division."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def spf_sieve(limit: int) -> list[int]:
    """Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0)."""
    spf = list(range(limit + 1))
    if limit >= 1:
        spf[1] = 0
    p = 2
    while p * p <= limit:
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
        p += 1
    return spf


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    p = 2
    while p * p <= limit:
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        p += 1
    return [i for i, flag in enumerate(sieve) if flag]


def nth_primes(count: int) -> list[int]:
    """The first `count` primes."""
    if count <= 0:
        return []
    # Rosser-style overshoot; cheap at the sizes used here.
    bound = 20
    while True:
        ps = primes_upto(bound)
        if len(ps) >= count:
            return ps[:count]
        bound *= 2
