"""Small exact number theory helpers on machine-size integers."""

from __future__ import annotations

from functools import lru_cache
from math import prod


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as sorted ``(p, e)`` pairs; ``factorize(1) == ()``."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def sigma(n: int) -> int:
    return sum(divisors(n))


def totient(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    n += 1
    while not is_prime(n):
        n += 1
    return n
