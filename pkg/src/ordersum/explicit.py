"""Explicit finite groups as Cayley tables.

A group of order n is an n x n table of element ids over 0..n-1 with the
identity fixed at id 0.  Everything downstream (element orders, the sum
of element orders, omega layers, subgroup search, quotients) is brute
force over the table, which is exactly what makes this module the oracle
for the symbolic engine.

Element numbering of the constructors:
  cyclic(k)        -- id i is the rotation r^i, so the table is (i + j) mod k.
  dihedral(2k)     -- ids 0..k-1 are rotations r^i, ids k..2k-1 are
                      reflections s*r^i; s*r*s = r^-1.
  dicyclic(4k)     -- ids 0..2k-1 are powers a^i, ids 2k..4k-1 are a^i*b;
                      a^(2k) = 1, b^2 = a^k, b*a*b^-1 = a^-1.
  direct products  -- pair (g, h) gets id g * |H| + h, so the left factor
                      occupies block-contiguous ids and {0} x H is 0..|H|-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .abelian import AbelianGroup, OrderType
from .numcore import coprime_part, factorize, lcm, p_part, prime_set

__all__ = [
    "CayleyGroup",
    "Subgroup",
    "TableError",
    "NoIdentityAtZero",
    "NotLatinSquare",
    "NotAssociative",
    "NotNormal",
    "CapExceeded",
    "validate_table",
    "element_order",
    "psi_of",
    "order_type_of",
    "exponent_of",
    "omega_level",
    "is_lcm_group",
    "is_lcm_group_literal",
    "is_nilpotent",
    "sylow_candidate",
    "is_lcm_structural",
    "direct_product",
    "quotient",
    "generated",
    "index_p_subgroups",
    "coset_psi",
    "coset_order_min",
    "coset_exponent",
    "coset_order_type",
    "p_part_decomposition",
    "cyclic",
    "dihedral",
    "dicyclic",
    "elementary_abelian",
    "from_abelian",
    "parse_table_text",
    "dump_table_text",
]

DEFAULT_ORDER_CAP = 512
DEFAULT_SUBGROUP_CAP = 128


class TableError(ValueError):
    """Raw table is not the Cayley table of a group."""


class NoIdentityAtZero(TableError):
    pass


class NotLatinSquare(TableError):
    pass


class NotAssociative(TableError):
    pass


class NotNormal(ValueError):
    """Quotient requested by a non-normal subgroup; carries a witness element."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"subgroup is not normal: g={witness} has gN != Ng")


class CapExceeded(ValueError):
    """Requested order is beyond the configured cap."""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds cap {cap}")


class CayleyGroup:
    """Immutable finite group given by its multiplication table.

    The table is an n x n int array with table[a, b] = a*b and identity 0.
    Derived data (element orders, LCM status) is computed lazily and cached.
    """

    __slots__ = ("n", "table", "label", "_orders", "_is_lcm")

    def __init__(self, table: np.ndarray, label: str = "G"):
        table = np.ascontiguousarray(table, dtype=np.int64)
        self.n = table.shape[0]
        self.table = table
        self.table.setflags(write=False)
        self.label = label
        self._orders = None
        self._is_lcm = None

    def __repr__(self):
        return f"CayleyGroup({self.label!r}, order={self.n})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(np.nonzero(self.table[a] == 0)[0][0])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(g), -k)
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, g])
        return acc

    @property
    def orders(self) -> np.ndarray:
        """Vector of element orders o(g), computed by iterated multiplication."""
        if self._orders is None:
            n = self.n
            orders = np.zeros(n, dtype=np.int64)
            base = np.arange(n)
            cur = base.copy()
            k = 1
            while True:
                done = (cur == 0) & (orders == 0)
                orders[done] = k
                if np.all(orders > 0):
                    break
                active = orders == 0
                cur[active] = self.table[cur[active], base[active]]
                k += 1
            self._orders = orders
            self._orders.setflags(write=False)
        return self._orders

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def psi(self) -> int:
        """Sum of element orders, by full enumeration."""
        return int(self.orders.sum())

    def exponent(self) -> int:
        ex = 1
        for d in np.unique(self.orders):
            ex = lcm(ex, int(d))
        return ex

    def order_type(self) -> OrderType:
        values, counts = np.unique(self.orders, return_counts=True)
        return OrderType.from_counts(
            {int(d): int(c) for d, c in zip(values, counts)}
        )

    def elements(self) -> range:
        return range(self.n)


def validate_table(raw, label: str = "G", max_order: int = DEFAULT_ORDER_CAP) -> CayleyGroup:
    """Check that raw is the Cayley table of a group with identity 0.

    O(n^3) associativity check (vectorized per row); raises a TableError
    subclass naming a witness on the first violation found.
    """
    table = np.asarray(raw, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise TableError(f"table must be square, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise TableError("empty table")
    if n > max_order:
        raise CapExceeded(n, max_order)
    if table.min() < 0 or table.max() >= n:
        raise TableError("table entries must be ids in 0..n-1")

    ids = np.arange(n)
    if not (np.array_equal(table[0], ids) and np.array_equal(table[:, 0], ids)):
        bad = int(np.nonzero((table[0] != ids) | (table[:, 0] != ids))[0][0])
        raise NoIdentityAtZero(f"id 0 is not a two-sided identity (witness {bad})")

    for a in range(n):
        if len(set(table[a].tolist())) != n:
            raise NotLatinSquare(f"row {a} repeats an entry")
        if len(set(table[:, a].tolist())) != n:
            raise NotLatinSquare(f"column {a} repeats an entry")

    for a in range(n):
        left = table[table[a]]          # left[b, c]  = (a*b)*c
        right = table[a][table]         # right[b, c] = a*(b*c)
        if not np.array_equal(left, right):
            b, c = (int(x[0]) for x in np.nonzero(left != right))
            raise NotAssociative(f"(a*b)*c != a*(b*c) at a={a}, b={b}, c={c}")

    return CayleyGroup(table, label)


# ---------------------------------------------------------------------------
# free-function API (thin wrappers over the methods)

def element_order(group: CayleyGroup, g: int) -> int:
    return group.element_order(g)


def psi_of(group: CayleyGroup) -> int:
    return group.psi()


def order_type_of(group: CayleyGroup) -> OrderType:
    return group.order_type()


def exponent_of(group: CayleyGroup) -> int:
    return group.exponent()


def omega_level(group: CayleyGroup, p: int, i: int) -> frozenset[int]:
    """Elements whose order divides p^i (a set, not necessarily a subgroup)."""
    if i < 0:
        raise ValueError(f"layer index must be >= 0, got {i}")
    target = p**i
    return frozenset(int(g) for g in np.nonzero(target % group.orders == 0)[0])


def _closed_under_product(group: CayleyGroup, members: frozenset[int]) -> bool:
    idx = np.fromiter(members, dtype=np.int64)
    sub = group.table[np.ix_(idx, idx)]
    mask = np.zeros(group.n, dtype=bool)
    mask[idx] = True
    return bool(np.all(mask[sub]))


def is_lcm_group(group: CayleyGroup) -> bool:
    """Pairwise test: o(ab) divides lcm(o(a), o(b)) for all a, b.

    The definition quantifies over powers x^n as well, but x^n is itself a
    group element already covered by the pairwise scan (cross-checked
    against the literal definition in is_lcm_group_literal).
    """
    if group._is_lcm is None:
        o = group.orders
        group._is_lcm = bool(np.all(np.lcm.outer(o, o) % o[group.table] == 0))
    return group._is_lcm


def is_lcm_group_literal(group: CayleyGroup) -> bool:
    """The definition verbatim: o(x^n y) | lcm(o(x^n), o(y)) for all x, y, n.

    Cubic; only used as a cross-validation oracle on small groups.
    """
    o = group.orders
    table = group.table
    for x in range(group.n):
        xn = 0
        for _ in range(group.element_order(x)):
            for y in range(group.n):
                if lcm(int(o[xn]), int(o[y])) % int(o[table[xn, y]]):
                    return False
            xn = int(table[xn, x])
    return True


def _p_element_set(group: CayleyGroup, p: int) -> frozenset[int]:
    o = group.orders
    mask = np.ones(group.n, dtype=bool)
    for q in prime_set(group.n) - {p}:
        mask &= o % q != 0
    return frozenset(int(g) for g in np.nonzero(mask)[0])


def sylow_candidate(group: CayleyGroup, p: int) -> "Subgroup | None":
    """The set of p-elements as a Subgroup, or None if it is not closed."""
    members = _p_element_set(group, p)
    if len(members) != p_part(group.n, p):
        return None
    if not _closed_under_product(group, members):
        return None
    return Subgroup(group, tuple(sorted(members)))


def is_nilpotent(group: CayleyGroup) -> bool:
    """Nilpotency via 'every p-element set is product-closed'.

    Equivalent to all Sylow subgroups being normal, i.e. the group being
    the direct product of its Sylow subgroups.
    """
    return all(sylow_candidate(group, p) is not None for p in prime_set(group.n))


def is_lcm_structural(group: CayleyGroup) -> bool:
    """Structural route: nilpotent and every omega layer of every Sylow
    subgroup product-closed.  Must agree with is_lcm_group everywhere."""
    for p in prime_set(group.n):
        syl = sylow_candidate(group, p)
        if syl is None:
            return False
        s = syl.as_group()
        i = 1
        while p ** (i - 1) < int(s.orders.max()):
            if not _closed_under_product(s, omega_level(s, p, i)):
                return False
            i += 1
    return True


@dataclass(frozen=True)
class Subgroup:
    """Sorted member ids of a subgroup of parent (validated on construction)."""

    parent: CayleyGroup
    members: tuple[int, ...]
    _skip_check: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if tuple(sorted(self.members)) != self.members:
            raise ValueError("members must be sorted")
        if self._skip_check:
            return
        if not self.members or self.members[0] != 0:
            raise ValueError("subgroup must contain the identity 0")
        if self.parent.n % len(self.members):
            raise ValueError(
                f"|members|={len(self.members)} does not divide |G|={self.parent.n}"
            )
        mset = frozenset(self.members)
        if not _closed_under_product(self.parent, mset):
            raise ValueError("member set is not closed under the table product")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.n // self.order

    def __contains__(self, g: int) -> bool:
        return g in self._member_set()

    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def psi(self) -> int:
        return int(self.parent.orders[list(self.members)].sum())

    def exponent(self) -> int:
        ex = 1
        for g in self.members:
            ex = lcm(ex, self.parent.element_order(g))
        return ex

    def as_group(self, label: str | None = None) -> CayleyGroup:
        """Re-index the members as a standalone CayleyGroup (identity stays 0)."""
        idx = np.asarray(self.members, dtype=np.int64)
        pos = np.full(self.parent.n, -1, dtype=np.int64)
        pos[idx] = np.arange(len(idx))
        return CayleyGroup(
            pos[self.parent.table[np.ix_(idx, idx)]],
            label or f"{self.parent.label}-sub{len(idx)}",
        )


def generated(group: CayleyGroup, gens) -> Subgroup:
    """Subgroup generated by a set of element ids, by closure scan."""
    members = {0}
    frontier = [0]
    gens = sorted(set(gens))
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                prod = int(group.table[g, h])
                if prod not in members:
                    members.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return Subgroup(group, tuple(sorted(members)))


def direct_product(left: CayleyGroup, right: CayleyGroup, label: str | None = None) -> CayleyGroup:
    """Direct product with id (g, h) -> g * |H| + h."""
    hn = right.n
    table = (
        left.table[:, None, :, None] * hn + right.table[None, :, None, :]
    ).reshape(left.n * hn, left.n * hn)
    return CayleyGroup(table, label or f"{left.label} x {right.label}")


def quotient(group: CayleyGroup, sub: Subgroup) -> CayleyGroup:
    """Quotient by a normal subgroup; coset ids numbered by least member."""
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    idx = np.asarray(sub.members, dtype=np.int64)
    for g in range(group.n):
        left = np.sort(group.table[g, idx])
        right = np.sort(group.table[idx, g])
        if not np.array_equal(left, right):
            raise NotNormal(g)

    coset_of = np.full(group.n, -1, dtype=np.int64)
    reps = []
    for g in range(group.n):
        if coset_of[g] < 0:
            members = group.table[g, idx]
            reps.append(int(members.min()))
            coset_of[members] = len(reps) - 1
    order = np.argsort(np.asarray(reps))
    relabel = np.empty(len(reps), dtype=np.int64)
    relabel[order] = np.arange(len(reps))
    coset_of = relabel[coset_of]
    reps = np.asarray(sorted(reps), dtype=np.int64)

    table = coset_of[group.table[np.ix_(reps, reps)]]
    return CayleyGroup(table, f"{group.label}/N{sub.order}")


def coset_map(group: CayleyGroup, sub: Subgroup) -> np.ndarray:
    """Element -> coset-id map matching quotient()'s numbering."""
    idx = np.asarray(sub.members, dtype=np.int64)
    coset_of = np.full(group.n, -1, dtype=np.int64)
    reps = []
    for g in range(group.n):
        if coset_of[g] < 0:
            members = group.table[g, idx]
            reps.append(int(members.min()))
            coset_of[members] = len(reps) - 1
    order = np.argsort(np.asarray(reps))
    relabel = np.empty(len(reps), dtype=np.int64)
    relabel[order] = np.arange(len(reps))
    return relabel[coset_of]


# ---------------------------------------------------------------------------
# cosets

def _coset_orders(v: int, sub: Subgroup) -> np.ndarray:
    group = sub.parent
    idx = np.asarray(sub.members, dtype=np.int64)
    return group.orders[group.table[v, idx]]


def coset_psi(v: int, sub: Subgroup) -> int:
    """Sum of o(v*m) over the coset vM."""
    return int(_coset_orders(v, sub).sum())


def coset_order_min(v: int, sub: Subgroup) -> int:
    """min { o(v*m) : m in M }."""
    return int(_coset_orders(v, sub).min())


def coset_exponent(v: int, sub: Subgroup) -> int:
    ex = 1
    for d in np.unique(_coset_orders(v, sub)):
        ex = lcm(ex, int(d))
    return ex


def coset_order_type(v: int, sub: Subgroup) -> tuple[tuple[int, int], ...]:
    """Multiset of orders over vM as ((order, count), ...); counts need not
    include a single identity, so this is a plain tuple, not an OrderType."""
    values, counts = np.unique(_coset_orders(v, sub), return_counts=True)
    return tuple((int(d), int(c)) for d, c in zip(values, counts))


def p_part_decomposition(group: CayleyGroup, g: int, p: int) -> tuple[int, int]:
    """Split g = g_p * g_p' into commuting p-part and p'-part inside <g>.

    Uses the Bezout split of o(g) = p^a * m: g_p = g^(m * m^-1 mod p^a),
    g_p' = g^(p^a * (p^a)^-1 mod m).
    """
    o = group.element_order(g)
    pa = p_part(o, p)
    m = coprime_part(o, p)
    if m == 1:
        return g, 0
    if pa == 1:
        return 0, g
    gp = group.power(g, m * pow(m, -1, pa))
    gp2 = group.power(g, pa * pow(pa, -1, m))
    return gp, gp2


# ---------------------------------------------------------------------------
# index-p subgroup search

def index_p_subgroups(
    group: CayleyGroup, p: int, max_order: int = DEFAULT_SUBGROUP_CAP
) -> list[Subgroup]:
    """All subgroups of index exactly p, deduplicated, deterministic order.

    Nilpotent groups take a fast exact route: every index-p subgroup is
    normal with elementary abelian p-quotient, so they are the preimages
    of the hyperplanes of G / <commutators, p-th powers>.  Other groups
    fall back to an exhaustive closure search over joins of cyclic
    subgroups, complete for orders up to max_order.
    """
    n = group.n
    if n > max_order:
        raise CapExceeded(n, max_order)
    if n % p:
        raise ValueError(f"{p} does not divide |G| = {n}")

    if is_nilpotent(group):
        subs = _index_p_nilpotent(group, p)
    else:
        subs = _index_p_search(group, p)
    return sorted(subs, key=lambda s: s.members)


def _index_p_nilpotent(group: CayleyGroup, p: int) -> list[Subgroup]:
    gens = set()
    for a in range(group.n):
        gens.add(group.power(a, p))
        ia = group.inv(a)
        for b in range(group.n):
            gens.add(
                int(group.table[group.table[a, b], group.table[ia, group.inv(b)]])
            )
    frattini = generated(group, gens)
    labels = coset_map(group, frattini)
    quot = quotient(group, frattini)

    # coordinates of the elementary abelian quotient over F_p
    dim = 0
    coords: dict[int, tuple[int, ...]] = {0: ()}
    for x in quot.elements():
        if x in coords:
            continue
        known = list(coords.items())
        for e, vec in known:
            acc = e
            for k in range(1, p):
                acc = quot.mul(acc, x)
                coords[acc] = vec + (k,)
        for e in coords:
            if len(coords[e]) == dim:
                coords[e] = coords[e] + (0,)
        dim += 1
    coords = {e: vec + (0,) * (dim - len(vec)) for e, vec in coords.items()}

    out = []
    for phi in _normalized_functionals(p, dim):
        kernel = {
            e for e, vec in coords.items()
            if sum(a * b for a, b in zip(phi, vec)) % p == 0
        }
        members = tuple(
            sorted(g for g in group.elements() if int(labels[g]) in kernel)
        )
        out.append(Subgroup(group, members))
    return out


def _normalized_functionals(p: int, dim: int):
    """Nonzero functionals over F_p^dim with leading nonzero coefficient 1."""
    def gen(prefix, started):
        if len(prefix) == dim:
            if started:
                yield tuple(prefix)
            return
        if not started:
            yield from gen(prefix + [0], False)
            yield from gen(prefix + [1], True)
        else:
            for c in range(p):
                yield from gen(prefix + [c], True)

    yield from gen([], False)


def _index_p_search(group: CayleyGroup, p: int) -> list[Subgroup]:
    target = group.n // p
    cyclics = []
    seen = set()
    for g in group.elements():
        members = frozenset(
            int(x) for x in _cyclic_members(group, g)
        )
        if members not in seen:
            seen.add(members)
            cyclics.append(members)

    known = {s for s in seen if group.n % len(s) == 0 and len(s) <= target}
    frontier = list(known)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyclics:
                if c <= s:
                    continue
                joined = _closure(group, s | c)
                if len(joined) <= target and joined not in known:
                    known.add(joined)
                    nxt.append(joined)
        frontier = nxt
    return [
        Subgroup(group, tuple(sorted(s))) for s in known if len(s) == target
    ]


def _cyclic_members(group: CayleyGroup, g: int):
    acc = 0
    yield 0
    for _ in range(group.element_order(g) - 1):
        acc = int(group.table[acc, g])
        yield acc


def _closure(group: CayleyGroup, seed: frozenset[int]) -> frozenset[int]:
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for prod in (int(group.table[a, b]), int(group.table[b, a])):
                    if prod not in members:
                        members.add(prod)
                        nxt.append(prod)
        frontier = nxt
    return frozenset(members)


# ---------------------------------------------------------------------------
# constructors

def cyclic(k: int, label: str | None = None) -> CayleyGroup:
    if k < 1:
        raise ValueError(f"cyclic order must be >= 1, got {k}")
    ids = np.arange(k)
    return CayleyGroup((ids[:, None] + ids[None, :]) % k, label or f"C{k}")


def dihedral(order: int) -> CayleyGroup:
    """Dihedral group OF ORDER order (even, >= 4): symmetries of an
    (order/2)-gon."""
    if order < 4 or order % 2:
        raise ValueError(f"dihedral order must be even and >= 4, got {order}")
    k = order // 2

    def mul(a, b):
        ea, ia = divmod(a, k)
        eb, ib = divmod(b, k)
        # (s^ea r^ia)(s^eb r^ib) = s^(ea+eb) r^(ib + (-1)^eb ia)
        return ((ea + eb) % 2) * k + (ib + (ia if eb == 0 else -ia)) % k

    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    return CayleyGroup(np.asarray(table), f"D{order}")


def dicyclic(order: int) -> CayleyGroup:
    """Dicyclic group OF ORDER order (multiple of 4, >= 8); order 8 is the
    quaternion group."""
    if order < 8 or order % 4:
        raise ValueError(f"dicyclic order must be a multiple of 4 and >= 8, got {order}")
    k = order // 4
    m = 2 * k

    def mul(a, b):
        ea, ia = divmod(a, m)
        eb, ib = divmod(b, m)
        if ea == 0:
            return eb * m + (ia + ib) % m
        # (a^ia b)(a^ib b^eb): b a^ib = a^-ib b
        i = (ia - ib) % m
        if eb == 0:
            return m + i
        return (i + k) % m  # b^2 = a^k
    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    return CayleyGroup(np.asarray(table), f"Q{order}")


def from_abelian(group: AbelianGroup, label: str | None = None) -> CayleyGroup:
    """Explicit Cayley-table form of a symbolic abelian group."""
    acc = cyclic(1)
    for q in group.cyclic_factors():
        acc = direct_product(acc, cyclic(q))
    return CayleyGroup(acc.table, label or group.label())


def elementary_abelian(p: int, k: int) -> CayleyGroup:
    return from_abelian(
        AbelianGroup.from_components({p: (1,) * k}), label=f"E({p},{k})"
    )


# ---------------------------------------------------------------------------
# plain-text table format: first line n, then n rows of n ids

def parse_table_text(text: str, label: str = "table", max_order: int = DEFAULT_ORDER_CAP) -> CayleyGroup:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise TableError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise TableError(f"first line must be the order, got {lines[0]!r}") from None
    rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise TableError(f"expected {n} rows of {n} ids")
    return validate_table(rows, label=label, max_order=max_order)


def dump_table_text(group: CayleyGroup) -> str:
    lines = [str(group.n)]
    lines.extend(" ".join(str(int(x)) for x in row) for row in group.table)
    return "\n".join(lines) + "\n"
