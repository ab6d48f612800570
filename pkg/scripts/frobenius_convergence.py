#!/usr/bin/env python3
"""Grid tallies approaching the exact values as q grows."""

import argparse

from hibi_fsig.analysis import compute_fsig, prepare
from hibi_fsig.fixtures import EXAMPLE
from hibi_fsig.frobenius import convergence_report
from hibi_fsig.poset import load_poset


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", nargs="?", help="poset JSON (default: the built-in example)")
    ap.add_argument("--qs", default="2,3,4,5,7,8,9,11")
    args = ap.parse_args()
    s = prepare(load_poset(args.file) if args.file else EXAMPLE)
    exact = {e.vector: e.value for e in compute_fsig(s, "descent").entries}
    qs = [int(q) for q in args.qs.split(",")]
    rep = convergence_report([s.tally(q) for q in qs], exact)
    print(f"{'q':>4}  {'max deviation':>14}  missing")
    for q, dev in zip(qs, rep.max_deviation):
        print(f"{q:>4}  {float(dev):>14.6f}  {len(rep.missing[q])}")


if __name__ == "__main__":
    main()
