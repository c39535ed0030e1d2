#!/usr/bin/env python3
"""Tabulate size caps for eta-regular matrix sets over a (K, q, g) grid.

For each cell the table shows the always-on defect cap K-2+(g+1)(q+1), the
class-1 cap (g+1)(q+1), and the partition cap (the largest L passing the
binomial counting inequality), with eta fixed to K so every hypothesis holds.
"""

import argparse

from udmg.codes import bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--g", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()

    header = f"{'K':>3} {'q':>3} {'g':>3} {'defect':>7} {'class1':>7} {'partition':>10}"
    print(header)
    print("-" * len(header))
    for K in args.K:
        for q in args.q:
            for g in args.g:
                rep = bounds(K, q, g, lengths=(K,) * 4)
                print(f"{K:>3} {q:>3} {g:>3} {rep.defect_bound:>7} "
                      f"{rep.class1_bound:>7} {rep.partition_bound:>10}")


if __name__ == "__main__":
    main()
