"""Mechanical verification harness.

Every statement the library relies on is instantiated here on concrete
groups from the constructor catalogue (abelian, dihedral, dicyclic, and
their direct products), with all hypotheses checked numerically before a
conclusion is asserted.  Configurations whose hypotheses fail are tallied
as vacuous, never as passes.  All arithmetic is exact integers; the one
rational bound is checked cross-multiplied.

Ambient groups for the coset statements are always explicit direct
products cyclic x G, which makes the ambient-quantified statements
finitely testable.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

import numpy as np

from . import abelian as ab
from . import explicit as ex
from .numcore import factorize, lcm, p_part, prime_set, valuation

__all__ = [
    "SuiteConfig",
    "VerdictReport",
    "check_multiplicativity",
    "check_reduction",
    "check_order_lemmas",
    "check_monotonicity",
    "check_dominating_bijection",
    "check_coset_bound",
    "check_exponent_alignment",
    "check_subset_gap",
    "check_coset_monotone",
    "check_order_type_theorem",
    "check_abelian_classification",
    "check_structural_equivalences",
    "run_suite",
    "scan_psi_ties",
    "LEMMA_IDS",
]

LEMMA_IDS = (
    "abelian-psi-classification",
    "complement-gap",
    "coset-order-min",
    "coset-power-ordertype",
    "coset-psi-monotonicity",
    "coset-psi-multiplicativity",
    "coset-psi-ratio",
    "dominating-bijection",
    "exponent-alignment",
    "exponent-monotonicity",
    "layer-reduction",
    "omega-closure",
    "ordertype-psi-equivalence",
    "order-lcm-additivity",
    "product-coset-ordertype",
    "psi-multiplicativity",
    "sylow-split",
    "torsion-split",
)


@dataclass(frozen=True)
class SuiteConfig:
    """Sampling knobs; the same config always yields the same reports."""

    seed: int = 20260825
    cap: int = 64            # base catalogue order cap
    product_cap: int = 128   # direct products of catalogue pairs up to here
    ambient_cap: int = 128   # cyclic x G ambients up to here
    max_configs: int = 400   # per-lemma ceiling on checked configurations
    classification_max: int = 2000  # abelian scan bound inside the suite


@dataclass
class VerdictReport:
    lemma_id: str
    passed: bool = True
    checked: int = 0
    vacuous: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def ok(self, n: int = 1):
        self.checked += n

    def skip(self, n: int = 1):
        self.vacuous += n

    def fail(self, **witness):
        self.passed = False
        self.failures.append({k: _plain(v) for k, v in sorted(witness.items())})

    def record(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "passed": self.passed,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "failures": self.failures,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.record(), sort_keys=True, separators=(",", ":"))


def _plain(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    return v


# ---------------------------------------------------------------------------
# catalogue

_BASE_CACHE: dict[int, list[ex.CayleyGroup]] = {}


def base_catalogue(cap: int) -> list[ex.CayleyGroup]:
    """All constructor-catalogue groups of order <= cap, deterministic order:
    abelian classes per order, then dihedral, then dicyclic."""
    if cap not in _BASE_CACHE:
        groups = []
        for n in range(1, cap + 1):
            for a in ab.enumerate_abelian(n):
                groups.append(ex.from_abelian(a))
        for n in range(6, cap + 1, 2):
            groups.append(ex.dihedral(n))
        for n in range(8, cap + 1, 4):
            groups.append(ex.dicyclic(n))
        _BASE_CACHE[cap] = groups
    return _BASE_CACHE[cap]


def lcm_catalogue(cap: int) -> list[ex.CayleyGroup]:
    return [g for g in base_catalogue(cap) if ex.is_lcm_group(g)]


def p_group_catalogue(cap: int) -> list[tuple[int, ex.CayleyGroup]]:
    """(p, G) for the prime-power-order catalogue groups of order <= cap."""
    out = []
    for g in base_catalogue(cap):
        fact = factorize(g.n)
        if len(fact) == 1:
            out.append((fact[0][0], g))
    return out


@dataclass(frozen=True)
class GroupStats:
    """Cheap summary of one catalogue group (tables are not retained)."""

    label: str
    order: int
    psi: int
    exponent: int
    order_type: tuple[tuple[int, int], ...]
    is_lcm: bool
    is_structural: bool
    nilpotent: bool


def _stats_of(g: ex.CayleyGroup) -> GroupStats:
    return GroupStats(
        label=g.label,
        order=g.n,
        psi=g.psi(),
        exponent=g.exponent(),
        order_type=g.order_type().entries,
        is_lcm=ex.is_lcm_group(g),
        is_structural=ex.is_lcm_structural(g),
        nilpotent=ex.is_nilpotent(g),
    )


_STATS_CACHE: dict[tuple[int, int], list[GroupStats]] = {}


def catalogue_stats(cap: int, product_cap: int) -> list[GroupStats]:
    """Stats for every base group of order <= cap and every direct product of
    a base pair up to product_cap (tables discarded after the pass)."""
    key = (cap, product_cap)
    if key not in _STATS_CACHE:
        base = base_catalogue(cap)
        stats = [_stats_of(g) for g in base]
        for i, g in enumerate(base):
            if g.n == 1:
                continue
            for h in base[i:]:
                if h.n == 1 or g.n * h.n > product_cap:
                    continue
                stats.append(_stats_of(ex.direct_product(g, h)))
        _STATS_CACHE[key] = stats
    return _STATS_CACHE[key]


# ---------------------------------------------------------------------------
# ambients: A = C_c x G with G occupying ids 0..|G|-1

def _extend(c: int, g: ex.CayleyGroup) -> ex.CayleyGroup:
    if c == 1:
        return g
    return ex.direct_product(ex.cyclic(c), g)


def _sub_ids(g_order: int) -> np.ndarray:
    return np.arange(g_order)


def _order_min(amb: ex.CayleyGroup, v: int, members: np.ndarray) -> int:
    return int(amb.orders[amb.table[v, members]].min())


def _coset_order_multiset(amb, v, members):
    vals, cnts = np.unique(amb.orders[amb.table[v, members]], return_counts=True)
    return tuple((int(a), int(b)) for a, b in zip(vals, cnts))


def _sample(seq, k, rng):
    seq = list(seq)
    if len(seq) <= k:
        return seq
    return [seq[i] for i in sorted(rng.sample(range(len(seq)), k))]


def _ambient_pool(config, g_cap, cyclic_orders):
    """Deterministic stream of (ambient, G, c) with G an LCM catalogue group."""
    for g in lcm_catalogue(min(config.cap, g_cap)):
        for c in cyclic_orders:
            if c * g.n > config.ambient_cap:
                continue
            amb = _extend(c, g)
            if not ex.is_lcm_group(amb):
                continue
            yield amb, g, c


# ---------------------------------------------------------------------------
# psi multiplicativity (product inequality + its coset generalization)

def check_multiplicativity(config: SuiteConfig, pairs=None) -> list[VerdictReport]:
    plain = VerdictReport("psi-multiplicativity")
    coset = VerdictReport("coset-psi-multiplicativity")
    rng = random.Random(config.seed)

    if pairs is None:
        small = [g for g in base_catalogue(min(config.cap, 16)) if g.n > 1]
        pairs = [
            (g, h)
            for i, g in enumerate(small)
            for h in small[i:]
            if g.n * h.n <= config.product_cap
        ]

    for g, h in pairs:
        if plain.checked >= config.max_configs:
            break
        prod = ex.direct_product(g, h)
        lhs = prod.psi()
        rhs = g.psi() * h.psi()
        coprime = np.gcd(g.n, h.n) == 1
        if lhs > rhs or (coprime and lhs != rhs) or (not coprime and lhs == rhs):
            plain.fail(left=g.label, right=h.label, product_psi=lhs, bound=rhs)
        else:
            plain.ok()

    # coset form: W = R x K, A <= R, B <= K, psi(vwAB) <= psi(vA) psi(wB)
    for r, k in _sample(pairs, 60, rng):
        if coset.checked >= config.max_configs:
            break
        w_group = ex.direct_product(r, k)
        kn = k.n
        subs_r = [ex.generated(r, [x]) for x in _sample(range(r.n), 2, rng)] + [
            ex.Subgroup(r, tuple(range(r.n)))
        ]
        subs_k = [ex.generated(k, [x]) for x in _sample(range(k.n), 2, rng)] + [
            ex.Subgroup(k, tuple(range(k.n)))
        ]
        for sub_a in subs_r:
            for sub_b in subs_k:
                for v in _sample(range(r.n), 2, rng):
                    for w in _sample(range(k.n), 2, rng):
                        ab_ids = np.asarray(
                            [a * kn + b for a in sub_a.members for b in sub_b.members]
                        )
                        vw = v * kn + w
                        lhs = int(w_group.orders[w_group.table[vw, ab_ids]].sum())
                        rhs_l = int(r.orders[r.table[v, np.asarray(sub_a.members)]].sum())
                        rhs_r = int(k.orders[k.table[w, np.asarray(sub_b.members)]].sum())
                        coprime = np.gcd(r.n, k.n) == 1
                        bad = lhs > rhs_l * rhs_r or (coprime and lhs != rhs_l * rhs_r)
                        if bad:
                            coset.fail(
                                ambient=w_group.label, v=v, w=w,
                                coset_psi=lhs, bound=rhs_l * rhs_r,
                            )
                        else:
                            coset.ok()
    return [plain, coset]


# ---------------------------------------------------------------------------
# first-layer reduction formula

def _reduction_groups(cap: int) -> list[tuple[int, ex.CayleyGroup]]:
    out = []
    for n in range(2, cap + 1):
        fact = factorize(n)
        if len(fact) != 1:
            continue
        p = fact[0][0]
        for a in ab.enumerate_abelian(n):
            out.append((p, ex.from_abelian(a)))
        if p == 2 and n >= 6 and n % 2 == 0:
            out.append((2, ex.dihedral(n)))
        if p == 2 and n >= 8 and n % 4 == 0:
            out.append((2, ex.dicyclic(n)))
    return out


def check_reduction(config: SuiteConfig, groups=None) -> VerdictReport:
    report = VerdictReport("layer-reduction")
    if groups is None:
        groups = _reduction_groups(config.product_cap)
    for p, g in groups:
        layer = ex.omega_level(g, p, 1)
        if not ex._closed_under_product(g, layer):
            report.skip()
            report.notes.append(f"{g.label}: exponent-p layer not a subgroup")
            continue
        sub = ex.Subgroup(g, tuple(sorted(layer)))
        r = valuation(sub.order, p)
        quot = ex.quotient(g, sub)
        expected = 1 - p + p ** (r + 1) * quot.psi()
        if g.psi() != expected:
            report.fail(group=g.label, psi=g.psi(), expected=expected, r=r)
        else:
            report.ok()
    return report


# ---------------------------------------------------------------------------
# order lemmas over cyclic x G ambients

def check_order_lemmas(config: SuiteConfig) -> list[VerdictReport]:
    add = VerdictReport("order-lcm-additivity")
    cmin = VerdictReport("coset-order-min")
    power = VerdictReport("coset-power-ordertype")
    triple = VerdictReport("product-coset-ordertype")
    rng = random.Random(config.seed + 1)

    # o(vg) = lcm(o(v), o(g)) whenever o(v) = o(v, G)
    for amb, g, c in _ambient_pool(config, 24, (1, 2, 3, 4, 5, 6, 8, 9)):
        if add.checked >= config.max_configs:
            break
        members = _sub_ids(g.n)
        o = amb.orders
        o_sub = o[members]
        for v in range(amb.n):
            ov = int(o[v])
            if ov != _order_min(amb, v, members):
                add.skip()
                continue
            row = o[amb.table[v, members]]
            if not np.array_equal(row, np.lcm(ov, o_sub)):
                bad = int(np.nonzero(row != np.lcm(ov, o_sub))[0][0])
                add.fail(ambient=amb.label, v=v, g=int(members[bad]),
                         got=int(row[bad]), want=int(np.lcm(ov, int(o_sub[bad]))))
                continue
            # p-element variant: o(vw) = lcm(o(v), o(w)) when o(w) != o(v_p)
            okay = True
            for p in prime_set(amb.n):
                vp, _ = ex.p_part_decomposition(amb, v, p)
                ovp = amb.element_order(vp)
                w_ids = np.asarray(
                    [w for w in ex._p_element_set(amb, p) if int(o[w]) != ovp],
                    dtype=np.int64,
                )
                if not len(w_ids):
                    continue
                got = o[amb.table[v, w_ids]]
                want = np.lcm(ov, o[w_ids])
                if not np.array_equal(got, want):
                    bad = int(np.nonzero(got != want)[0][0])
                    add.fail(ambient=amb.label, v=v, w=int(w_ids[bad]), p=p,
                             got=int(got[bad]), want=int(want[bad]))
                    okay = False
                    break
            if okay:
                add.ok()

    # o(vw) = o(vw, M) for maximal M and p-elements w not in M
    for amb, g, c in _ambient_pool(config, 16, (1, 2, 3, 4, 6, 8)):
        if cmin.checked >= config.max_configs:
            break
        members = _sub_ids(g.n)
        o = amb.orders
        for p in sorted(prime_set(g.n)):
            for sub in ex.index_p_subgroups(g, p):
                m_ids = np.asarray(sub.members)
                p_elems = ex._p_element_set(g, p)
                w_pool = [w for w in sorted(p_elems - set(sub.members))]
                for v in _sample(range(amb.n), 8, rng):
                    if int(o[v]) != _order_min(amb, v, members):
                        cmin.skip()
                        continue
                    for w in w_pool:
                        if int(o[w]) != _order_min(amb, w, m_ids):
                            cmin.skip()
                            continue
                        vw = int(amb.table[v, w])
                        if int(o[vw]) != _order_min(amb, vw, m_ids):
                            cmin.fail(ambient=amb.label, v=v, w=w,
                                      o_vw=int(o[vw]),
                                      coset_min=_order_min(amb, vw, m_ids))
                        else:
                            cmin.ok()

    # the cosets vxM and vx^iM share an order type (hence a psi value)
    for amb, g, c in _ambient_pool(config, 16, (1, 2, 3, 4, 6, 8)):
        if power.checked >= config.max_configs:
            break
        members = _sub_ids(g.n)
        o = amb.orders
        for p in sorted(prime_set(g.n)):
            for sub in ex.index_p_subgroups(g, p):
                m_ids = np.asarray(sub.members)
                outside = sorted(set(range(g.n)) - set(sub.members))
                for v in _sample(range(amb.n), 6, rng):
                    if int(o[v]) != _order_min(amb, v, members):
                        power.skip()
                        continue
                    for x in _sample(outside, 4, rng):
                        vx = int(amb.table[v, x])
                        if int(o[vx]) != _order_min(amb, vx, m_ids):
                            power.skip()
                            continue
                        base_type = _coset_order_multiset(amb, vx, m_ids)
                        xi = x
                        bad = False
                        for _ in range(2, p + 1):
                            xi = int(g.table[xi, x])
                            if xi in sub._member_set():
                                break
                            vxi = int(amb.table[v, xi])
                            if _coset_order_multiset(amb, vxi, m_ids) != base_type:
                                power.fail(ambient=amb.label, v=v, x=x, xi=xi)
                                bad = True
                                break
                        if not bad:
                            power.ok()

    # order type of vwG matches the componentwise triple (v, w, G)
    for g in lcm_catalogue(min(config.cap, 16)):
        if triple.checked >= config.max_configs:
            break
        for c1 in (2, 3, 4, 5, 6):
            for c2 in (2, 3, 4, 6):
                if c1 * c2 * g.n > config.ambient_cap:
                    continue
                amb = ex.direct_product(
                    ex.direct_product(ex.cyclic(c1), ex.cyclic(c2)), g
                )
                if not ex.is_lcm_group(amb):
                    continue
                members = _sub_ids(g.n)
                o = amb.orders
                for a in (1, c1 - 1):
                    for b in (1, c2 - 1):
                        v = (a * c2) * g.n
                        w = b * g.n
                        vw = int(amb.table[v, w])
                        hyp = (
                            int(o[v]) == _order_min(amb, v, members)
                            and int(o[vw]) == _order_min(amb, vw, members)
                            and int(o[vw]) == lcm(int(o[v]), int(o[w]))
                        )
                        if not hyp:
                            triple.skip()
                            continue
                        got = _coset_order_multiset(amb, vw, members)
                        want: dict[int, int] = {}
                        for d in g.orders[members]:
                            t = lcm(lcm(int(o[v]), int(o[w])), int(d))
                            want[t] = want.get(t, 0) + 1
                        if got != tuple(sorted(want.items())):
                            triple.fail(ambient=amb.label, v=v, w=w)
                        else:
                            triple.ok()
    return [add, cmin, power, triple]


# ---------------------------------------------------------------------------
# exponent monotonicity for p-groups

def check_monotonicity(config: SuiteConfig, pairs=None) -> VerdictReport:
    report = VerdictReport("exponent-monotonicity")
    if pairs is None:
        groups = [
            (p, g) for p, g in p_group_catalogue(config.cap) if ex.is_lcm_group(g)
        ]
        pairs = [
            (p, g, h)
            for p, g in groups
            for q, h in groups
            if p == q and g.n == h.n and g.exponent() > h.exponent()
        ]
    for p, g, h in pairs:
        psi_g, psi_h = g.psi(), h.psi()
        floor = (g.n - g.n // p) * g.exponent()
        if psi_g < (p - 1) * psi_h or psi_g <= psi_h or psi_g <= floor:
            report.fail(larger=g.label, smaller=h.label, p=p,
                        psi_larger=psi_g, psi_smaller=psi_h, floor=floor)
        else:
            report.ok()
    return report


# ---------------------------------------------------------------------------
# dominating bijection from the reference homocyclic-by-elementary group

def check_dominating_bijection(config: SuiteConfig) -> VerdictReport:
    report = VerdictReport("dominating-bijection")
    for p, g in p_group_catalogue(config.cap):
        if not ex.is_lcm_group(g) or g.n == 1:
            continue
        n = valuation(g.n, p)
        top = valuation(g.exponent(), p)
        g_orders = sorted((int(d) for d in g.orders), reverse=True)
        for m in range(1, top + 1):
            ref = ab.AbelianGroup.from_components({p: (m,) + (1,) * (n - m)})
            h_counts = ab.order_type_of(ref).counts()
            h_orders = sorted(
                (d for d, cnt in h_counts.items() for _ in range(cnt)), reverse=True
            )
            dominated = all(
                hd <= gd and gd % hd == 0
                for hd, gd in zip(h_orders, g_orders)
            )
            cumulative = all(
                sum(1 for d in h_orders if d >= p**k)
                <= sum(1 for d in g_orders if d >= p**k)
                for k in range(top + 1)
            )
            if not (dominated and cumulative):
                report.fail(group=g.label, p=p, m=m)
            else:
                report.ok()
    return report


# ---------------------------------------------------------------------------
# cross-multiplied coset ratio bound (p+1)/p psi(vM) > psi(vxM)

def check_coset_bound(config: SuiteConfig) -> VerdictReport:
    report = VerdictReport("coset-psi-ratio")
    rng = random.Random(config.seed + 2)
    for p, g in p_group_catalogue(min(config.cap, 32)):
        if report.checked >= config.max_configs:
            break
        if not ex.is_lcm_group(g) or g.n == 1:
            continue
        subs = [
            s for s in ex.index_p_subgroups(g, p) if s.exponent() == g.exponent()
        ]
        for a in range(4):
            c = p**a
            if c * g.n > config.ambient_cap:
                continue
            amb = _extend(c, g)
            if not ex.is_lcm_group(amb):
                continue
            members = _sub_ids(g.n)
            o = amb.orders
            for sub in subs:
                m_ids = np.asarray(sub.members)
                outside = sorted(set(range(g.n)) - set(sub.members))
                for v in _sample(range(amb.n), 6, rng):
                    if int(o[v]) != _order_min(amb, v, members):
                        report.skip()
                        continue
                    psi_vm = int(o[amb.table[v, m_ids]].sum())
                    bad = False
                    for x in outside:
                        vx = int(amb.table[v, x])
                        psi_vxm = int(o[amb.table[vx, m_ids]].sum())
                        if p * psi_vxm >= (p + 1) * psi_vm:
                            report.fail(ambient=amb.label, subgroup=len(m_ids),
                                        v=v, x=x, lhs=p * psi_vxm,
                                        rhs=(p + 1) * psi_vm)
                            bad = True
                            break
                    if not bad:
                        report.ok()
    return report


# ---------------------------------------------------------------------------
# p-part of o(vx) aligns with the p-part of exp(vG)

def check_exponent_alignment(config: SuiteConfig) -> VerdictReport:
    report = VerdictReport("exponent-alignment")
    rng = random.Random(config.seed + 3)
    for amb, g, c in _ambient_pool(config, 24, (1, 2, 3, 4, 5, 6, 8, 9)):
        if report.checked >= config.max_configs:
            break
        members = _sub_ids(g.n)
        o = amb.orders
        for p in sorted(prime_set(g.n)):
            subs = ex.index_p_subgroups(g, p)
            if not subs:
                continue
            if any(not ex.is_lcm_group(s.as_group()) for s in subs):
                report.skip()
                continue
            for v in _sample(range(amb.n), 8, rng):
                if int(o[v]) != _order_min(amb, v, members):
                    report.skip()
                    continue
                psis = [int(o[amb.table[v, np.asarray(s.members)]].sum()) for s in subs]
                best = min(psis)
                exp_vg = 1
                for d in np.unique(o[amb.table[v, members]]):
                    exp_vg = lcm(exp_vg, int(d))
                target = p_part(exp_vg, p)
                for sub, psi_vm in zip(subs, psis):
                    if psi_vm != best:
                        continue
                    outside = sorted(set(range(g.n)) - set(sub.members))
                    bad = False
                    for x in outside:
                        vx = int(amb.table[v, x])
                        if p_part(int(o[vx]), p) != target:
                            report.fail(ambient=amb.label, p=p, v=v, x=x,
                                        got=p_part(int(o[vx]), p), want=target)
                            bad = True
                            break
                    if not bad:
                        report.ok()
    return report


# ---------------------------------------------------------------------------
# boundary comparison: psi(G \ N) > psi(H \ M) forces psi(G) > psi(H)

def _minimal_index_p_psi(g: ex.CayleyGroup, p: int) -> tuple[int, bool] | None:
    """(min psi over index-p subgroups, all such subgroups LCM) or None."""
    subs = ex.index_p_subgroups(g, p)
    if not subs:
        return None
    best = min(s.psi() for s in subs)
    all_lcm = all(
        ex.is_lcm_group(s.as_group()) for s in subs if s.psi() == best
    )
    return best, all_lcm


def check_subset_gap(config: SuiteConfig, pairs=None) -> VerdictReport:
    report = VerdictReport("complement-gap")
    groups = lcm_catalogue(config.cap)
    by_order: dict[int, list[ex.CayleyGroup]] = {}
    for g in groups:
        by_order.setdefault(g.n, []).append(g)

    cache: dict[tuple[int, int], tuple[int, bool] | None] = {}

    def min_psi(g, p):
        key = (id(g), p)
        if key not in cache:
            cache[key] = _minimal_index_p_psi(g, p)
        return cache[key]

    for order, members in sorted(by_order.items()):
        if order == 1 or len(members) < 2:
            continue
        if report.checked >= config.max_configs:
            break
        for p in sorted(prime_set(order)):
            for g in members:
                for h in members:
                    if g is h:
                        continue
                    mg = min_psi(g, p)
                    mh = min_psi(h, p)
                    if mg is None or mh is None or not (mg[1] and mh[1]):
                        report.skip()
                        continue
                    lhs = g.psi() - mg[0]
                    rhs = h.psi() - mh[0]
                    if lhs <= rhs:
                        report.skip()  # antecedent false: vacuous
                        continue
                    if g.psi() > h.psi():
                        report.ok()
                    else:
                        report.fail(larger=g.label, smaller=h.label, p=p,
                                    boundary_larger=lhs, boundary_smaller=rhs,
                                    psi_larger=g.psi(), psi_smaller=h.psi())
    return report


# ---------------------------------------------------------------------------
# coset monotonicity: psi(G) >= psi(H) propagates to psi(vG) >= psi(uH)

def _p_element_coset_profiles(g: ex.CayleyGroup, p: int, config) -> list[tuple[int, int]]:
    """(o(v), psi(vG)) for p-element generators v of cyclic extensions C_{p^a} x G,
    one entry per achievable order, hypotheses o(v) = o(v, G) verified."""
    profiles: dict[int, int] = {}
    for a in range(0, 5):
        c = p**a
        if c * g.n > 2 * config.ambient_cap:
            continue
        amb = _extend(c, g)
        if not ex.is_lcm_group(amb):
            continue
        members = _sub_ids(g.n)
        o = amb.orders
        for s in range(a + 1):
            v = (p**s % c) * g.n if c > 1 else 0
            ov = int(o[v])
            if ov != _order_min(amb, v, members):
                continue
            profiles.setdefault(ov, int(o[amb.table[v, members]].sum()))
    return sorted(profiles.items())


def check_coset_monotone(config: SuiteConfig) -> VerdictReport:
    report = VerdictReport("coset-psi-monotonicity")
    groups = [g for g in lcm_catalogue(min(config.cap, 16))]
    by_order: dict[int, list[ex.CayleyGroup]] = {}
    for g in groups:
        by_order.setdefault(g.n, []).append(g)

    for order, members in sorted(by_order.items()):
        if report.checked >= config.max_configs:
            break
        for p in (2, 3):
            prof = {id(g): _p_element_coset_profiles(g, p, config) for g in members}
            for g in members:
                for h in members:
                    if g.psi() < h.psi():
                        continue
                    exp_g_p = p_part(g.exponent(), p)
                    exp_h_p = p_part(h.exponent(), p)
                    for ov, psi_vg in prof[id(g)]:
                        for ou, psi_uh in prof[id(h)]:
                            if (ov == 1) != (ou == 1):
                                report.skip()
                                continue
                            # need r >= 0 with o(v) >= p^r exp(G)_p
                            # and o(u) <= p^r exp(H)_p
                            r_low = max(0, valuation(ou, p) - valuation(exp_h_p, p))
                            if ov < p**r_low * exp_g_p:
                                report.skip()
                                continue
                            if psi_vg >= psi_uh:
                                report.ok()
                            else:
                                report.fail(
                                    larger=g.label, smaller=h.label, p=p,
                                    o_v=ov, o_u=ou,
                                    psi_vG=psi_vg, psi_uH=psi_uh,
                                )
    return report


# ---------------------------------------------------------------------------
# psi determines the order type across the LCM catalogue

def check_order_type_theorem(config: SuiteConfig) -> VerdictReport:
    report = VerdictReport("ordertype-psi-equivalence")
    stats = [s for s in catalogue_stats(config.cap, config.product_cap) if s.is_lcm]
    by_order: dict[int, list[GroupStats]] = {}
    for s in stats:
        by_order.setdefault(s.order, []).append(s)
    for order, members in sorted(by_order.items()):
        for i, s in enumerate(members):
            for t in members[i + 1:]:
                if (s.psi == t.psi) != (s.order_type == t.order_type):
                    report.fail(left=s.label, right=t.label,
                                psi_left=s.psi, psi_right=t.psi)
                else:
                    report.ok()

    # the non-LCM tie: equal psi, different order types, one side not LCM
    g = ex.direct_product(ex.cyclic(2), ex.dihedral(16))
    h = ex.direct_product(ex.cyclic(4), ex.dicyclic(8))
    tie_ok = (
        g.psi() == h.psi() == 119
        and g.order_type() != h.order_type()
        and not ex.is_lcm_group(g)
        and ex.is_lcm_group(h)
    )
    if tie_ok:
        report.ok()
        report.notes.append(
            "C2 x D16 vs C4 x Q8: psi ties at 119 with different order types; "
            "the non-LCM side shows the LCM hypothesis is essential"
        )
    else:
        report.fail(left=g.label, right=h.label,
                    psi_left=g.psi(), psi_right=h.psi())
    return report


# ---------------------------------------------------------------------------
# abelian classification: psi injective per order, invariant-factor round trip

def check_abelian_classification(config: SuiteConfig, n_max: int | None = None) -> VerdictReport:
    report = VerdictReport("abelian-psi-classification")
    n_max = n_max or config.classification_max
    explicit_cap = min(config.cap, 64)
    for n in range(1, n_max + 1):
        groups = ab.enumerate_abelian(n)
        seen_psi: dict[int, ab.AbelianGroup] = {}
        seen_type: dict[tuple, ab.AbelianGroup] = {}
        bad = False
        for a in groups:
            value = ab.psi(a)
            if value in seen_psi:
                report.fail(order=n, psi=value,
                            left=seen_psi[value].label(), right=a.label())
                bad = True
            seen_psi[value] = a
            entries = ab.order_type_of(a).entries if n <= 4096 else None
            if entries is not None:
                if entries in seen_type:
                    report.fail(order=n, kind="order-type collision",
                                left=seen_type[entries].label(), right=a.label())
                    bad = True
                seen_type[entries] = a
            back = ab.from_invariant_factors(ab.to_invariant_factors(a))
            if back != a:
                report.fail(order=n, kind="invariant-factor round trip",
                            group=a.label())
                bad = True
            if n <= explicit_cap:
                if ex.from_abelian(a).order_type().entries != ab.order_type_of(a).entries:
                    report.fail(order=n, kind="symbolic/explicit mismatch",
                                group=a.label())
                    bad = True
        if not bad:
            report.ok()
    return report


# ---------------------------------------------------------------------------
# structural equivalences: omega layers, Sylow split, torsion split

def check_structural_equivalences(config: SuiteConfig) -> list[VerdictReport]:
    omega = VerdictReport("omega-closure")
    sylow = VerdictReport("sylow-split")
    torsion = VerdictReport("torsion-split")

    # pairwise LCM test vs structural test on base groups and products
    for s in catalogue_stats(config.cap, config.product_cap):
        if s.is_lcm != s.is_structural:
            sylow.fail(group=s.label, pairwise=s.is_lcm, structural=s.is_structural)
        else:
            sylow.ok()

    # omega layers of p-groups: all layers closed (and generating nothing
    # beyond themselves) exactly when the group is LCM
    for p, g in p_group_catalogue(config.cap):
        if g.n == 1:
            continue
        top = valuation(g.exponent(), p)
        closed = True
        for i in range(1, top + 1):
            layer = ex.omega_level(g, p, i)
            gen = ex.generated(g, layer)._member_set()
            if layer != gen:
                closed = False
                break
        if closed != ex.is_lcm_group(g):
            omega.fail(group=g.label, layers_closed=closed,
                       lcm=ex.is_lcm_group(g))
        else:
            omega.ok()

    # torsion split: for nilpotent G and divisor d with {x : x^d = 1} a
    # subgroup N, G is LCM iff both N and G/N are
    def torsion_check(g: ex.CayleyGroup):
        if not ex.is_nilpotent(g):
            return
        o = g.orders
        from .numcore import divisors

        for d in divisors(g.n):
            mask = d % o == 0
            members = frozenset(int(x) for x in np.nonzero(mask)[0])
            if g.n % len(members) or not ex._closed_under_product(g, members):
                torsion.skip()
                continue
            sub = ex.Subgroup(g, tuple(sorted(members)))
            n_ok = ex.is_lcm_group(sub.as_group())
            q_ok = ex.is_lcm_group(ex.quotient(g, sub))
            if ex.is_lcm_group(g) != (n_ok and q_ok):
                torsion.fail(group=g.label, d=d, sub_lcm=n_ok, quot_lcm=q_ok,
                             lcm=ex.is_lcm_group(g))
            else:
                torsion.ok()

    for g in base_catalogue(config.cap):
        torsion_check(g)
    base = base_catalogue(config.cap)
    for i, g in enumerate(base):
        for h in base[i:]:
            n = g.n * h.n
            if g.n == 1 or h.n == 1 or n > config.product_cap:
                continue
            if len(factorize(n)) == 1:  # p-group products carry the content
                torsion_check(ex.direct_product(g, h))
    return [omega, sylow, torsion]


# ---------------------------------------------------------------------------
# suite driver

_CHECKS = (
    ("psi-multiplicativity", None),  # filled in run_suite
)


def run_suite(config: SuiteConfig | None = None, lemmas=None) -> list[VerdictReport]:
    """Run every check, return reports sorted by lemma id.

    lemmas optionally restricts to a subset of LEMMA_IDS.
    """
    config = config or SuiteConfig()
    reports: list[VerdictReport] = []
    producers = (
        lambda: check_multiplicativity(config),
        lambda: [check_reduction(config)],
        lambda: check_order_lemmas(config),
        lambda: [check_monotonicity(config)],
        lambda: [check_dominating_bijection(config)],
        lambda: [check_coset_bound(config)],
        lambda: [check_exponent_alignment(config)],
        lambda: [check_subset_gap(config)],
        lambda: [check_coset_monotone(config)],
        lambda: [check_order_type_theorem(config)],
        lambda: [check_abelian_classification(config)],
        lambda: check_structural_equivalences(config),
    )
    wanted = set(lemmas) if lemmas else None
    for produce in producers:
        for report in produce():
            if wanted is None or report.lemma_id in wanted:
                reports.append(report)
    reports.sort(key=lambda r: r.lemma_id)
    if wanted is not None:
        missing = wanted - {r.lemma_id for r in reports}
        if missing:
            raise ValueError(f"unknown lemma ids: {sorted(missing)}")
    return reports


def report_lines(reports: list[VerdictReport]) -> str:
    """Line-delimited JSON, one record per verdict; byte-stable per config."""
    return "\n".join(r.to_json() for r in reports) + "\n"


def summary_table(reports: list[VerdictReport]) -> str:
    width = max(len(r.lemma_id) for r in reports)
    lines = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        lines.append(
            f"{r.lemma_id:<{width}}  {status}  checked={r.checked:<5d} vacuous={r.vacuous}"
        )
    total = sum(r.checked for r in reports)
    failed = [r.lemma_id for r in reports if not r.passed]
    lines.append("")
    if failed:
        lines.append(f"FAILED: {', '.join(failed)}")
    else:
        lines.append(f"all {len(reports)} checks passed ({total} configurations)")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# exploratory scan (no pass/fail semantics)

def scan_psi_ties(cap: int = 32) -> list[dict]:
    """Search for psi ties between an LCM group and an arbitrary catalogue
    group of the same order whose exponent divides the LCM group's.

    Purely exploratory output for the open question; nothing is asserted.
    """
    stats = catalogue_stats(cap, cap)
    ties = []
    for s in stats:
        if not s.is_lcm:
            continue
        for t in stats:
            if t.order != s.order or t.label == s.label:
                continue
            if s.exponent % t.exponent:
                continue
            if s.psi == t.psi:
                ties.append({
                    "order": s.order,
                    "lcm_group": s.label,
                    "other": t.label,
                    "other_is_lcm": t.is_lcm,
                    "same_order_type": s.order_type == t.order_type,
                    "psi": s.psi,
                })
    return ties
