import pytest
import sympy
from hypothesis import given, strategies as st

from ordersum.numcore import (
    coprime_part,
    divisors,
    exact_div,
    factorize,
    gcd,
    is_prime,
    lcm,
    p_part,
    partitions_of,
    prime_set,
    valuation,
)

# partition numbers p(1)..p(30), independent reference values
PARTITION_COUNTS = [
    1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297,
    385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604,
]


def test_exact_div():
    assert exact_div(12, 4) == 3
    assert exact_div(0, 7) == 0
    with pytest.raises(ValueError):
        exact_div(13, 4)


def test_factorize_against_sympy():
    for n in range(1, 2000):
        assert dict(factorize(n)) == sympy.factorint(n)


def test_factorize_rejects_nonpositive():
    for n in (0, -1, -12):
        with pytest.raises(ValueError):
            factorize(n)


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_reconstructs(n):
    prod = 1
    prev_p = 1
    for p, e in factorize(n):
        assert p > prev_p and e >= 1
        prev_p = p
        prod *= p**e
    assert prod == n


def test_is_prime_against_sympy():
    for n in range(0, 500):
        assert is_prime(n) == sympy.isprime(n)


def test_valuation_and_parts():
    assert valuation(72, 2) == 3
    assert valuation(72, 3) == 2
    assert valuation(72, 5) == 0
    assert p_part(72, 2) == 8
    assert coprime_part(72, 2) == 9
    with pytest.raises(ValueError):
        valuation(0, 2)


@given(st.integers(min_value=1, max_value=10**6), st.sampled_from([2, 3, 5, 7, 11]))
def test_p_part_splits(n, p):
    assert p_part(n, p) * coprime_part(n, p) == n
    assert coprime_part(n, p) % p != 0


def test_prime_set():
    assert prime_set(1) == frozenset()
    assert prime_set(900) == frozenset({2, 3, 5})


def test_divisors_against_sympy():
    for n in (1, 2, 12, 36, 97, 360, 900, 1024):
        assert divisors(n) == sympy.divisors(n)


def test_partitions_counts():
    for k, expected in enumerate(PARTITION_COUNTS, start=1):
        assert len(partitions_of(k)) == expected


def test_partitions_shape():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for k in range(1, 15):
        parts = partitions_of(k)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert sum(lam) == k
            assert list(lam) == sorted(lam, reverse=True)
            assert all(a >= 1 for a in lam)
        # reverse-lexicographic order
        assert list(parts) == sorted(parts, reverse=True)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_gcd_lcm_identity(a, b):
    assert gcd(a, b) * lcm(a, b) == a * b
    assert lcm(a, b) % a == 0 and lcm(a, b) % b == 0
