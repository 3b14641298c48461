#!/usr/bin/env python3
"""Exact defect thresholds for the closed-tree family.

For each (h, k) in range, compute the least defect of an (h-1)-coloring of
ct(h, k) by complete search.  The threshold always lands at k, never k-1:
the family realizes the lower bound that the elimination-scheme pipeline is
built around.
"""

from __future__ import annotations

import argparse
import sys
import time

from defcolor.coloring import min_defect
from defcolor.graphs import ct, ct_order


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-h", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=16)
    args = ap.parse_args()

    print(f"{'h':>2s} {'k':>2s} {'n':>4s} {'min defect of (h-1)-coloring':>30s} {'s':>6s}")
    for h in range(2, args.max_h + 1):
        for k in range(1, args.max_k + 1):
            n = ct_order(h, k)
            if n > args.max_vertices:
                print(f"{h:2d} {k:2d} {n:4d} {'skipped (raise --max-vertices)':>30s}")
                continue
            t0 = time.time()
            got = min_defect(ct(h, k), h - 1, max_vertices=args.max_vertices)
            dt = time.time() - t0
            marker = "= k" if got == k else f"!= k ({got})"
            print(f"{h:2d} {k:2d} {n:4d} {f'{got}  {marker}':>30s} {dt:6.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
