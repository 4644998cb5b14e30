"""Exact integer plumbing: factorization, partitions, p-parts, divisors.

Everything here is a plain Python int, so all arithmetic is arbitrary
precision for free.  No floats anywhere.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

__all__ = [
    "gcd",
    "lcm",
    "exact_div",
    "factorize",
    "is_prime",
    "valuation",
    "p_part",
    "coprime_part",
    "prime_set",
    "divisors",
    "partitions_of",
]


def exact_div(a: int, b: int) -> int:
    """Divide a by b, insisting the division is exact."""
    q, r = divmod(a, b)
    if r:
        raise ValueError(f"{a} is not divisible by {b}")
    return q


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization of n >= 1 as [(p, e), ...], primes ascending.

    factorize(1) == [].  Intended for desk-scale inputs (<= ~1e9).
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
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


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def p_part(n: int, p: int) -> int:
    """The p-part of n: the largest power of p dividing n."""
    return p ** valuation(n, p)


def coprime_part(n: int, p: int) -> int:
    """The p'-part of n: n with every factor of p removed."""
    return n // p_part(n, p)


def prime_set(n: int) -> frozenset[int]:
    """Set of prime divisors of n."""
    return frozenset(p for p, _ in factorize(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of k >= 1 in reverse-lexicographic order.

    Each partition is a non-increasing tuple of positive parts, e.g.
    partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)).
    """
    if k < 1:
        raise ValueError(f"partitions_of needs k >= 1, got {k}")

    def gen(rest: int, bound: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(k, k))
