"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 consistency failure, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from .alcove import DescentDimensionError, path_from_order
from .analysis import METHODS, compute_fsig, fmt, fmt_over, poset_digest, prepare
from .conic import UnboundedRegionError
from .cycles import SpanningTreeError
from .fixtures import EXAMPLE, EXAMPLE_PATH_ORDER, EXAMPLE_VALUES_OVER_120, EXAMPLE_WITNESSES_10, named_fixtures
from .frobenius import DEFAULT_BUDGET, BudgetExceededError, convergence_report, prime_power
from .polytope import DimensionLimitError, UnboundedPolytopeError, cube, volume
from .poset import PosetError, load_poset
from .segre import (SegreClassError, SegreSpec, build_segre_poset, fsig_segre_2var,
                    fsig_segre_theorem, fsig_segre_two_rings, segre_conic_classes, segre_path)

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT, EXIT_RESOURCE = 0, 1, 2, 3

INVALID = (PosetError, SpanningTreeError, SegreClassError, UnboundedRegionError,
           UnboundedPolytopeError, OSError)
RESOURCE = (DimensionLimitError, DescentDimensionError, BudgetExceededError)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _tree(text: str):
    """``1,2,3`` (1-based edge numbers) or ``bot:p1,p1:p2`` (edge endpoints)."""
    items = [x.strip() for x in text.split(",") if x.strip()]
    if all(":" in x for x in items):
        return [tuple(x.split(":", 1)) for x in items]
    try:
        return [int(x) - 1 for x in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse tree {text!r}") from None


def _vec(c) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


def _emit(args, doc: dict, lines: list[str]):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print("\n".join(lines))


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]


def cmd_validate(args) -> int:
    s = prepare(load_poset(args.file), args.tree)
    doc = {"poset_digest": poset_digest(s.poset), "d": s.dim, "n": s.hat.n_edges,
           "pure": s.pure, "circuits": len(s.circuits),
           "spanning_tree": [s.edge_label(k) for k in s.tree.tree_edges]}
    lines = [f"{k}: {json.dumps(v) if not isinstance(v, str) else v}" for k, v in doc.items()]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_conic(args) -> int:
    s = prepare(load_poset(args.file), args.tree)
    classes = s.classes
    doc = {"poset_digest": poset_digest(s.poset),
           "cotree": [s.edge_label(k) for k in s.tree.cotree_edges],
           "classes": [list(c) for c in classes]}
    _emit(args, doc, [f"{len(classes)} conic classes"] + [_vec(c) for c in classes])
    return EXIT_OK


def cmd_fsig(args) -> int:
    s = prepare(load_poset(args.file), args.tree)
    classes = [args.klass] if args.klass is not None else None
    if classes is not None and args.klass not in set(s.classes):
        raise SegreClassError(f"{_vec(args.klass)} is not a conic class for this spanning tree")
    qs = tuple(args.q or ())
    report = compute_fsig(s, args.method, classes, qs, args.max_dim, args.budget)
    doc = report.to_dict()
    head = ["class", "s", "s*d!", "decimal"] + (["volume"] if report.method != "descent" else []) \
        + (["descent"] if report.method != "volume" else []) + [f"q={q}" for q in qs] + ["ok"]
    rows = [head]
    for item in doc["classes"]:
        row = [_vec(item["class"]), item["s"], item["s_over_d_factorial"], item["decimal"]]
        row += list(item["methods"].values())
        row += [str(item["tallies"][str(q)]["count"]) for q in qs]
        row.append("yes" if item["consistent"] else "NO")
        rows.append(row)
    g = doc["global"]
    lines = [f"poset {doc['poset_digest']}  d={doc['d']}  n={doc['n']}",
             "tree " + " ".join(doc["spanning_tree"])] + _table(rows)
    lines += [f"sum {g['sum']}  sum_check {_flag(g['sum_check'])}  pure {_flag(g['pure'])}"
              f"  duality {_flag(g['duality_check'])}  consistent {_flag(g['consistent'])}"]
    _emit(args, doc, lines)
    return EXIT_OK if report.ok and report.duality_ok is not False else EXIT_INCONSISTENT


def _flag(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


def cmd_frobenius(args) -> int:
    s = prepare(load_poset(args.file), args.tree)
    q = args.q_single
    tally = s.tally(q, args.budget)
    exact = {e.vector: e.value for e in compute_fsig(s, "descent", max_dim=args.max_dim).entries}
    rep = convergence_report([tally], exact)
    pp = prime_power(q)
    label = f"{pp[0]}^{pp[1]}" if pp else "not a prime power"
    rows = [["class", "count", "density", "exact", "deviation"]]
    items = []
    for c in sorted(tally.counts):
        n = tally.counts.get(c, 0)
        dens = Fraction(n, tally.total)
        ex = exact.get(c)
        dev = abs(dens - ex) if ex is not None else None
        rows.append([_vec(c), str(n), fmt(dens), fmt(ex) if ex is not None else "-",
                     fmt(dev) if dev is not None else "-"])
        items.append({"class": list(c), "count": n, "density": fmt(dens),
                      "exact": fmt(ex) if ex is not None else None,
                      "deviation": fmt(dev) if dev is not None else None})
    total = sum(tally.counts.values())
    doc = {"poset_digest": poset_digest(s.poset), "q": q, "prime_power": label, "d": s.dim,
           "grid_points": total, "rows": items, "max_deviation": fmt(rep.max_deviation[0]),
           "missing": [list(c) for c in rep.missing[q]]}
    lines = [f"q={q} ({label})  d={s.dim}  grid points {total}"] + _table(rows)
    lines.append(f"max deviation {fmt(rep.max_deviation[0])}  missing "
                 + (" ".join(_vec(c) for c in rep.missing[q]) or "none"))
    _emit(args, doc, lines)
    stray = set(tally.counts) - set(exact)
    return EXIT_OK if total == q ** s.dim and not stray else EXIT_INCONSISTENT


def segre_rows(spec: SegreSpec, classes=None, max_dim=None):
    """Per class: engine value and every closed form that applies."""
    poset = build_segre_poset(spec)
    s = prepare(poset)
    s.path = segre_path(spec, s.hat)
    sizes = spec.sizes
    out = []
    for c in (classes if classes is not None else segre_conic_classes(spec)):
        c = tuple(c)
        vals = {"descent": s.descent(c, max_dim=max_dim or 10).value,
                "theorem": fsig_segre_theorem(spec, c)}
        if spec.dim <= (max_dim or 8):
            vals["volume"] = s.volume(c, max_dim or 8)
        if all(r == 1 for r in sizes):
            vals["two_variable"] = fsig_segre_2var(spec.t, c)
        if spec.t == 2:
            vals["hypersimplex"] = fsig_segre_two_rings(sizes[0], sizes[1], c[0]).value
        out.append((c, vals))
    return s, out


def cmd_segre(args) -> int:
    spec = SegreSpec(args.sizes)
    if any(r <= 0 for r in spec.sizes) or spec.t < 2:
        raise SegreClassError("need at least two chain sizes, each >= 1")
    if args.klass is not None and args.klass not in set(segre_conic_classes(spec)):
        raise SegreClassError(f"{_vec(args.klass)} is not a conic class")
    s, rows = segre_rows(spec, [args.klass] if args.klass is not None else None, args.max_dim)
    names = list(rows[0][1]) if rows else []
    den = factorial(spec.dim)
    table = [["class"] + names + ["agree"]]
    items, ok = [], True
    for c, vals in rows:
        agree = len(set(vals.values())) == 1
        ok &= agree
        table.append([_vec(c)] + [fmt_over(v, den) for v in vals.values()] + ["yes" if agree else "NO"])
        items.append({"class": list(c), "values": {k: fmt(v) for k, v in vals.items()}, "agree": agree})
    total = sum((next(iter(v.values())) for _, v in rows), Fraction(0))
    if args.klass is None:
        ok &= total == 1
    doc = {"sizes": list(spec.sizes), "d": spec.dim, "classes": items, "sum": fmt(total), "ok": ok}
    lines = [f"segre {','.join(map(str, spec.sizes))}  d={spec.dim}"] + _table(table)
    lines.append(f"sum {fmt(total)}  {'ok' if ok else 'MISMATCH'}")
    _emit(args, doc, lines)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def selftest_checks():
    """(name, passed) pairs over the built-in fixtures."""
    checks = []
    s = prepare(EXAMPLE)
    rep = compute_fsig(s)
    got = {e.vector: e.value for e in rep.entries}
    checks.append(("example golden values",
                   got == {c: Fraction(v, 120) for c, v in EXAMPLE_VALUES_OVER_120.items()}))
    ps = prepare(EXAMPLE, path=path_from_order(s.hat, EXAMPLE_PATH_ORDER))
    wit = {"".join(map(str, w)) for w, _ in ps.descent((1, 0), witnesses=True).witnesses}
    checks.append(("example witness set", wit == EXAMPLE_WITNESSES_10))
    for name, poset in named_fixtures().items():
        fs = prepare(poset)
        r = compute_fsig(fs, "both" if fs.dim <= 7 else "descent")
        checks.append((f"{name}: methods agree, sum 1", r.ok and r.sum_ok is True))
        if fs.pure:
            checks.append((f"{name}: duality", r.duality_ok is True))
    for sizes in [(1, 1), (1, 2), (2, 2), (1, 1, 1)]:
        _, rows = segre_rows(SegreSpec(sizes))
        checks.append((f"segre {sizes}: closed forms", all(len(set(v.values())) == 1 for _, v in rows)))
    checks.append(("unit cube volume", volume(cube(3)).value == 1))
    return checks


def cmd_selftest(args) -> int:
    checks = selftest_checks()
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
    failed = sum(1 for _, p in checks if not p)
    print(f"{len(checks) - failed}/{len(checks)} passed")
    return EXIT_OK if not failed else EXIT_INCONSISTENT


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not consistency failures
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hibi-fsig", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, tree=True):
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.add_argument("--max-dim", type=int, default=None, help="dimension limit for the exact engines")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="grid-point budget for tallies")
        if tree:
            p.add_argument("--tree", type=_tree, default=None,
                           help="spanning tree: 1-based edge numbers or lower:upper pairs")

    p = sub.add_parser("validate", help="parse a poset file and summarise P-hat")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("conic", help="list the conic classes")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_conic)

    p = sub.add_parser("fsig", help="generalized F-signature of every conic class")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="both")
    p.add_argument("--class", dest="klass", type=_ints, default=None)
    p.add_argument("--q", type=int, action="append", help="also tally at this q (repeatable)")
    common(p)
    p.set_defaults(func=cmd_fsig)

    p = sub.add_parser("frobenius", help="grid tally at one q against the exact values")
    p.add_argument("file")
    p.add_argument("--q", dest="q_single", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("segre", help="Segre product of polynomial rings: engine vs closed forms")
    p.add_argument("sizes", type=_ints, help="number of extra variables per ring, e.g. 1,1,1")
    p.add_argument("--class", dest="klass", type=_ints, default=None)
    common(p, tree=False)
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("selftest", help="run the built-in invariant checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RESOURCE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except INVALID as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
