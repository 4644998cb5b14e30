"""Symbolic finite abelian groups.

A group is stored by primary decomposition: one integer partition per
prime, where a partition (a1 >= a2 >= ...) at prime p means
C_{p^a1} x C_{p^a2} x ...  The sum of element orders, the order type and
the exponent all come from closed formulas on the partitions, so groups
of order 10^4 and beyond cost microseconds instead of a Cayley table.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .numcore import exact_div, factorize, is_prime, lcm, partitions_of, valuation

__all__ = [
    "OrderType",
    "AbelianGroup",
    "InvariantFactors",
    "PsiCollisionError",
    "layer_count",
    "order_type_of",
    "psi",
    "psi_homocyclic",
    "psi_via_reduction",
    "enumerate_abelian",
    "to_invariant_factors",
    "from_invariant_factors",
    "identify_by_psi",
]


@dataclass(frozen=True)
class OrderType:
    """Multiset of element orders: ((order, count), ...) ascending by order."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        orders = [d for d, _ in self.entries]
        if orders != sorted(orders) or len(set(orders)) != len(orders):
            raise ValueError("order-type entries must be strictly ascending")
        if any(c <= 0 for _, c in self.entries):
            raise ValueError("order-type counts must be positive")
        if not self.entries or self.entries[0] != (1, 1):
            raise ValueError("order type must start with exactly one identity")

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "OrderType":
        return cls(tuple(sorted((d, c) for d, c in counts.items() if c)))

    def counts(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        """Number of group elements, sum of all counts."""
        return sum(c for _, c in self.entries)

    @property
    def psi(self) -> int:
        """Sum of element orders: sum of d * count(d)."""
        return sum(d * c for d, c in self.entries)

    @property
    def exponent(self) -> int:
        ex = 1
        for d, _ in self.entries:
            ex = lcm(ex, d)
        return ex

    def combine(self, other: "OrderType") -> "OrderType":
        """Order type of a direct product: o((a, b)) = lcm(o(a), o(b))."""
        counts: dict[int, int] = {}
        for d1, c1 in self.entries:
            for d2, c2 in other.entries:
                d = lcm(d1, d2)
                counts[d] = counts.get(d, 0) + c1 * c2
        return OrderType.from_counts(counts)


def _canonical_components(components) -> tuple[tuple[int, tuple[int, ...]], ...]:
    canon = []
    for p, parts in sorted(dict(components).items()):
        parts = tuple(sorted(parts, reverse=True))
        if not parts:
            continue
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if any(a < 1 for a in parts):
            raise ValueError(f"partition at prime {p} has non-positive part: {parts}")
        canon.append((p, parts))
    return tuple(canon)


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group as a map prime -> partition of the prime's exponent.

    The empty map is the trivial group.
    """

    components: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        object.__setattr__(self, "components", _canonical_components(self.components))

    @classmethod
    def from_components(cls, mapping: dict[int, tuple[int, ...]]) -> "AbelianGroup":
        return cls(tuple(mapping.items()))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls.from_components({p: (e,) for p, e in factorize(n)})

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbelianGroup":
        """Direct sum of cyclic groups, e.g. [180, 5] -> C180 x C5."""
        acc = cls.trivial()
        for n in orders:
            acc = acc.direct_sum(cls.cyclic(n))
        return acc

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        merged: dict[int, tuple[int, ...]] = {p: parts for p, parts in self.components}
        for p, parts in other.components:
            merged[p] = merged.get(p, ()) + parts
        return AbelianGroup.from_components(merged)

    @property
    def order(self) -> int:
        n = 1
        for p, parts in self.components:
            n *= p ** sum(parts)
        return n

    @property
    def exponent(self) -> int:
        ex = 1
        for p, parts in self.components:
            ex *= p ** parts[0]
        return ex

    def cyclic_factors(self) -> tuple[int, ...]:
        """Primary-decomposition cyclic factor orders, ascending."""
        return tuple(sorted(p**a for p, parts in self.components for a in parts))

    def label(self) -> str:
        if not self.components:
            return "C1"
        return " x ".join(f"C{q}" for q in self.cyclic_factors())


def layer_count(p: int, parts: tuple[int, ...], i: int) -> int:
    """Number of solutions of x^(p^i) = 1 in the abelian p-group with partition parts.

    Equals p ** sum(min(a, i)); validated against brute force in the tests
    before anything downstream trusts it.
    """
    if i < 0:
        raise ValueError(f"layer index must be >= 0, got {i}")
    return p ** sum(min(a, i) for a in parts)


@lru_cache(maxsize=None)
def _p_order_counts(p: int, parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """((p^i, number of elements of order p^i), ...) for one primary component."""
    top = parts[0]
    out = []
    prev = 1
    for i in range(top + 1):
        cur = layer_count(p, parts, i)
        if cur != prev or i == 0:
            out.append((p**i, cur - prev if i else 1))
        prev = cur
    return tuple((d, c) for d, c in out if c)


def order_type_of(group: AbelianGroup) -> OrderType:
    """Order type assembled multiplicatively from per-prime layer differences."""
    ot = OrderType(((1, 1),))
    for p, parts in group.components:
        ot = ot.combine(OrderType(_p_order_counts(p, parts)))
    return ot


@lru_cache(maxsize=None)
def _psi_p(p: int, parts: tuple[int, ...]) -> int:
    return sum(d * c for d, c in _p_order_counts(p, parts))


def psi(group: AbelianGroup) -> int:
    """Sum of element orders.

    Computed as the product of the per-prime sums: the sum of element
    orders is multiplicative across components of coprime order.
    """
    value = 1
    for p, parts in group.components:
        value *= _psi_p(p, parts)
    return value


def psi_homocyclic(p: int, m: int, n: int) -> int:
    """Sum of element orders of C_{p^m} x (C_p)^(n-m), in closed form.

    Exact: 1 - p + p^(n-m+2) * (p^(2m-1) + 1) / (p + 1); the division is
    exact because 2m-1 is odd.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need n >= m >= 1, got m={m}, n={n}")
    return 1 - p + p ** (n - m + 2) * exact_div(p ** (2 * m - 1) + 1, p + 1)


def psi_via_reduction(p: int, parts: tuple[int, ...]) -> int:
    """Sum of element orders via the first-layer reduction recursion.

    Each step strips the exponent-p layer: with r parts the layer has
    order p^r, and the quotient's partition subtracts 1 from every part.
    """
    parts = tuple(sorted(parts, reverse=True))
    if not parts:
        return 1
    r = len(parts)
    quotient = tuple(a - 1 for a in parts if a > 1)
    return 1 - p + p ** (r + 1) * psi_via_reduction(p, quotient)


def enumerate_abelian(n: int) -> list[AbelianGroup]:
    """One representative per isomorphism class of abelian groups of order n.

    Deterministic order: primes ascending, partitions reverse-lexicographic.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    fact = factorize(n)
    choices = [[(p, parts) for parts in partitions_of(e)] for p, e in fact]
    return [AbelianGroup(combo) for combo in product(*choices)]


@dataclass(frozen=True)
class InvariantFactors:
    """Divisibility chain d1 | d2 | ... | dk with product equal to the group order."""

    chain: tuple[int, ...]

    def __post_init__(self):
        for d in self.chain:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.chain, self.chain[1:]):
            if b % a:
                raise ValueError(f"chain violates divisibility: {a} does not divide {b}")

    def label(self) -> str:
        if not self.chain:
            return "C1"
        return " x ".join(f"C{d}" for d in self.chain)


def to_invariant_factors(group: AbelianGroup) -> InvariantFactors:
    """Regroup the primary decomposition into the invariant-factor chain."""
    depth = max((len(parts) for _, parts in group.components), default=0)
    chain = []
    for i in range(depth):
        d = 1
        for p, parts in group.components:
            if i < len(parts):
                d *= p ** parts[i]
        chain.append(d)
    return InvariantFactors(tuple(reversed(chain)))


def from_invariant_factors(factors: InvariantFactors) -> AbelianGroup:
    """Inverse of to_invariant_factors."""
    components: dict[int, list[int]] = {}
    for d in factors.chain:
        for p, e in factorize(d):
            components.setdefault(p, []).append(e)
    return AbelianGroup.from_components(
        {p: tuple(es) for p, es in components.items()}
    )


class PsiCollisionError(Exception):
    """Two non-isomorphic abelian groups of the same order share a psi value.

    Per the classification theorem this must never happen; raising it is a
    falsification signal, not a recoverable condition.
    """

    def __init__(self, n: int, value: int, matches: list[AbelianGroup]):
        self.n = n
        self.value = value
        self.matches = matches
        labels = ", ".join(g.label() for g in matches)
        super().__init__(
            f"psi is not injective at order {n}: value {value} matches [{labels}]"
        )


def identify_by_psi(n: int, value: int) -> AbelianGroup | None:
    """Recover the abelian group of order n with the given sum of element orders.

    Full enumeration scan; returns None when no group matches and raises
    PsiCollisionError on a multiple match.
    """
    matches = [g for g in enumerate_abelian(n) if psi(g) == value]
    if not matches:
        return None
    if len(matches) > 1:
        raise PsiCollisionError(n, value, matches)
    return matches[0]
