#!/usr/bin/env python3
"""Segre products: engine against the closed forms for all chain sizes up to a total."""

import argparse

from hibi_fsig.cli import segre_rows
from hibi_fsig.segre import SegreSpec


def compositions(n, parts):
    if parts == 1:
        yield (n,)
        return
    for k in range(1, n - parts + 2):
        for rest in compositions(n - k, parts - 1):
            yield (k, *rest)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=5, help="largest sum of chain sizes (d - 1)")
    args = ap.parse_args()
    print(f"{'sizes':<16}{'classes':>8}{'methods':>9}  agree")
    for n in range(2, args.max_total + 1):
        for t in range(2, n + 1):
            for sizes in compositions(n, t):
                _, rows = segre_rows(SegreSpec(sizes))
                agree = all(len(set(v.values())) == 1 for _, v in rows)
                print(f"{str(sizes):<16}{len(rows):>8}{len(rows[0][1]):>9}  {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
