#!/usr/bin/env python3
"""The worked example: conic classes, values, witnesses and the alcoved form of one class."""

import argparse

from hibi_fsig.alcove import path_from_order, transform_to_alcoved
from hibi_fsig.analysis import compute_fsig, fmt_over, prepare
from hibi_fsig.fixtures import EXAMPLE, EXAMPLE_PATH_ORDER


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--witnesses", type=str, default="1,0", help="class whose witnesses to list")
    args = ap.parse_args()

    s = prepare(EXAMPLE)
    s = prepare(EXAMPLE, path=path_from_order(s.hat, EXAMPLE_PATH_ORDER))
    print("tree:", " ".join(s.edge_label(k) for k in s.tree.tree_edges))
    print("cotree:", " ".join(s.edge_label(k) for k in s.tree.cotree_edges))
    print("conic region:")
    for coeffs, lo, hi in s.region.inequalities:
        print(f"  {lo} <= {coeffs} . c <= {hi}")

    rep = compute_fsig(s)
    print(f"{'class':>8}  {'volume':>8}  {'descent':>8}")
    for e in rep.entries:
        print(f"{str(e.vector):>8}  {fmt_over(e.volume, 120):>8}  {fmt_over(e.descent, 120):>8}")
    print("sum:", rep.total)

    c = tuple(int(x) for x in args.witnesses.split(","))
    print(f"alcoved form of class {c} along path {' '.join(EXAMPLE_PATH_ORDER)}:")
    for form in transform_to_alcoved(s.cell(c), s.hamiltonian_path, s.tree, s.hat):
        for i, j, lo, hi in form.constraints:
            print(f"  {lo} <= z{j} - z{i} <= {hi}")
    wit = sorted("".join(map(str, w)) for w, _ in s.descent(c, witnesses=True).witnesses)
    print(f"{len(wit)} witnesses:", " ".join(wit))


if __name__ == "__main__":
    main()
