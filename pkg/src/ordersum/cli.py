"""Command-line front end.

Group expressions:  terms joined by 'x' (case-insensitive, whitespace ok)
    C<n>          cyclic of order n
    D<n>          dihedral of order n (even, >= 4)
    Q<n>          dicyclic of order n (multiple of 4, >= 8); Q8 = quaternions
    E(p,k)        elementary abelian p^k
    table:<path>  explicit Cayley table from a file (first line n, then n rows)

Expressions built only from C and E terms stay symbolic (no size cap);
anything involving D, Q or table: builds an explicit table, subject to
--cap (default 512).

Exit codes: 0 ok, 1 verification failure / negative result, 2 bad usage
or unparseable input, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import abelian as ab
from . import explicit as ex
from . import lab

__all__ = ["main", "parse_group_expr", "GroupExprError"]


class GroupExprError(ValueError):
    """Group expression did not parse; message carries the position."""


_TERM = re.compile(
    r"""
    (?P<cyc>C(?P<cn>\d+))
  | (?P<dih>D(?P<dn>\d+))
  | (?P<dic>Q(?P<qn>\d+))
  | (?P<elem>E\(\s*(?P<ep>\d+)\s*,\s*(?P<ek>\d+)\s*\))
  | (?P<table>table:(?P<path>\S+))
    """,
    re.IGNORECASE | re.VERBOSE,
)


def _parse_terms(text: str) -> list[tuple[str, object]]:
    """Tokenize into [('C', 12), ('E', (2, 3)), ('table', 'path'), ...]."""
    terms = []
    pos = 0
    expect_term = True
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if expect_term:
            m = _TERM.match(text, pos)
            if not m:
                raise GroupExprError(
                    f"expected a group term at position {pos}: {text[pos:pos + 12]!r}"
                )
            if m.group("cyc"):
                terms.append(("C", int(m.group("cn"))))
            elif m.group("dih"):
                terms.append(("D", int(m.group("dn"))))
            elif m.group("dic"):
                terms.append(("Q", int(m.group("qn"))))
            elif m.group("elem"):
                terms.append(("E", (int(m.group("ep")), int(m.group("ek")))))
            else:
                terms.append(("table", m.group("path")))
            pos = m.end()
        else:
            if text[pos] not in "xX":
                raise GroupExprError(
                    f"expected 'x' between terms at position {pos}: {text[pos:pos + 12]!r}"
                )
            pos += 1
        expect_term = not expect_term
    if expect_term:
        raise GroupExprError("expression ends after 'x'; expected a group term")
    return terms


def parse_group_expr(text: str, cap: int = ex.DEFAULT_ORDER_CAP):
    """Parse a group expression to an AbelianGroup or a CayleyGroup.

    Purely cyclic/elementary-abelian expressions come back symbolic;
    anything else becomes an explicit table (order capped at cap).
    """
    terms = _parse_terms(text)
    symbolic = all(kind in ("C", "E") for kind, _ in terms)
    if symbolic:
        acc = ab.AbelianGroup.trivial()
        for kind, value in terms:
            if kind == "C":
                acc = acc.direct_sum(ab.AbelianGroup.cyclic(value))
            else:
                p, k = value
                acc = acc.direct_sum(ab.AbelianGroup.from_components({p: (1,) * k}))
        return acc

    order = 1
    for kind, value in terms:
        if kind == "C":
            order *= value
        elif kind in ("D", "Q"):
            order *= value
        elif kind == "E":
            order *= value[0] ** value[1]
        else:
            # table order is only known after reading the file; check below
            pass
    if order > cap:
        raise ex.CapExceeded(order, cap)

    factors = []
    for kind, value in terms:
        if kind == "C":
            factors.append(ex.cyclic(value))
        elif kind == "D":
            factors.append(ex.dihedral(value))
        elif kind == "Q":
            factors.append(ex.dicyclic(value))
        elif kind == "E":
            factors.append(ex.elementary_abelian(*value))
        else:
            text_data = Path(value).read_text()
            factors.append(ex.parse_table_text(text_data, label=value, max_order=cap))
    group = factors[0]
    for f in factors[1:]:
        if group.n * f.n > cap:
            raise ex.CapExceeded(group.n * f.n, cap)
        group = ex.direct_product(group, f)
    return group


def _as_explicit(group, cap):
    if isinstance(group, ab.AbelianGroup):
        if group.order > cap:
            raise ex.CapExceeded(group.order, cap)
        return ex.from_abelian(group)
    return group


def _facts(group):
    """(label, order, psi, order_type_entries, is_lcm) for either engine."""
    if isinstance(group, ab.AbelianGroup):
        return (
            group.label(),
            group.order,
            ab.psi(group),
            ab.order_type_of(group).entries,
            True,  # abelian groups always satisfy the lcm condition
        )
    return (
        group.label,
        group.n,
        group.psi(),
        group.order_type().entries,
        ex.is_lcm_group(group),
    )


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _json_facts(label, order, psi, entries, lcm_flag) -> dict:
    # all numbers as decimal strings so arbitrary precision survives any consumer
    return {
        "group": label,
        "order": str(order),
        "psi": str(psi),
        "order_type": [[str(d), str(c)] for d, c in entries],
        "lcm": lcm_flag,
    }


def _format_order_type(entries) -> str:
    return " ".join(f"{d}:{c}" for d, c in entries)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_psi(args) -> int:
    group = parse_group_expr(args.group, cap=args.cap)
    if args.force_explicit:
        group = _as_explicit(group, args.cap)
    label, order, psi, entries, lcm_flag = _facts(group)
    _emit(args, _json_facts(label, order, psi, entries, lcm_flag), str(psi))
    return 0


def _cmd_ordertype(args) -> int:
    group = parse_group_expr(args.group, cap=args.cap)
    if args.force_explicit:
        group = _as_explicit(group, args.cap)
    label, order, psi, entries, lcm_flag = _facts(group)
    _emit(
        args,
        _json_facts(label, order, psi, entries, lcm_flag),
        _format_order_type(entries),
    )
    return 0


def _cmd_lcmcheck(args) -> int:
    group = parse_group_expr(args.group, cap=args.cap)
    if args.force_explicit:
        group = _as_explicit(group, args.cap)
    label, order, psi, entries, lcm_flag = _facts(group)
    _emit(args, _json_facts(label, order, psi, entries, lcm_flag),
          "yes" if lcm_flag else "no")
    return 0 if lcm_flag else 1


def _cmd_identify(args) -> int:
    try:
        match = ab.identify_by_psi(args.order, args.psi)
    except ab.PsiCollisionError as e:
        print(f"ambiguous: {e}", file=sys.stderr)
        return 1
    if match is None:
        _emit(args, {"group": None, "order": str(args.order), "psi": str(args.psi)},
              "none")
        return 0
    chain = ab.to_invariant_factors(match).label()
    _emit(
        args,
        _json_facts(chain, match.order, ab.psi(match),
                    ab.order_type_of(match).entries, True),
        chain,
    )
    return 0


def _cmd_enumerate(args) -> int:
    rows = []
    for g in ab.enumerate_abelian(args.order):
        rows.append((g.label(), ab.psi(g), ab.to_invariant_factors(g).label()))
    if args.json:
        print(json.dumps(
            [{"group": lbl, "psi": str(v), "invariant_factors": inv}
             for lbl, v, inv in rows],
            sort_keys=True,
        ))
    else:
        for lbl, v, inv in rows:
            print(f"{lbl}\tpsi={v}\tinvariant factors: {inv}")
    return 0


def _cmd_verify(args) -> int:
    config = lab.SuiteConfig(seed=args.seed, cap=args.cap)
    try:
        reports = lab.run_suite(config, lemmas=args.lemma or None)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2
    if args.json:
        sys.stdout.write(lab.report_lines(reports))
    else:
        sys.stdout.write(lab.summary_table(reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_counterexamples(args) -> int:
    # psi is not monotone in the exponent across abelian groups of one order
    pair = [ab.AbelianGroup.from_cyclic_orders([180, 5]),
            ab.AbelianGroup.from_cyclic_orders([150, 6])]
    print("psi versus exponent (abelian, order 900):")
    for g in pair:
        chain = ab.to_invariant_factors(g).label()
        print(f"  {chain:<12} exponent={g.exponent:<5} psi={ab.psi(g)}")
    print("  larger exponent, smaller psi")
    print()
    g = ex.direct_product(ex.cyclic(2), ex.dihedral(16))
    h = ex.direct_product(ex.cyclic(4), ex.dicyclic(8))
    print("equal psi, different order types (order 32):")
    for grp in (g, h):
        lcm_flag = "yes" if ex.is_lcm_group(grp) else "no"
        print(f"  {grp.label:<9} psi={grp.psi()}  lcm={lcm_flag}  "
              f"order type: {_format_order_type(grp.order_type().entries)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordersum",
        description="Sum-of-element-orders invariants for finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def group_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("group", help="group expression, e.g. 'C4 x D16' or table:FILE")
        p.add_argument("--cap", type=int, default=ex.DEFAULT_ORDER_CAP,
                       help="max order for explicit tables (default %(default)s)")
        p.add_argument("--force-explicit", action="store_true",
                       help="build a Cayley table even for abelian input")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    group_command("psi", _cmd_psi, "sum of element orders")
    group_command("ordertype", _cmd_ordertype, "multiset of element orders")
    group_command("lcmcheck", _cmd_lcmcheck,
                  "does o(ab) always divide lcm(o(a), o(b))? exit 1 if not")

    p = sub.add_parser("identify",
                       help="recover the abelian group of a given order from its psi value")
    p.add_argument("order", type=int)
    p.add_argument("psi", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_identify)

    p = sub.add_parser("enumerate", help="all abelian groups of one order, with psi")
    p.add_argument("order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--lemma", action="append", metavar="ID",
                   help="restrict to one check id (repeatable); see --list")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.add_argument("--seed", type=int, default=lab.SuiteConfig.seed)
    p.add_argument("--cap", type=int, default=lab.SuiteConfig.cap,
                   help="catalogue order cap (default %(default)s)")
    p.add_argument("--json", action="store_true",
                   help="line-delimited JSON verdicts instead of the table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("counterexamples",
                       help="print the boundary examples that motivate the hypotheses")
    p.set_defaults(func=_cmd_counterexamples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        for lemma_id in lab.LEMMA_IDS:
            print(lemma_id)
        return 0
    try:
        return args.func(args)
    except ex.CapExceeded as e:
        print(str(e), file=sys.stderr)
        return 3
    except (GroupExprError, ex.TableError, OSError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
