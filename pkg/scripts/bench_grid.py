"""Scaling of the tree construction on square grids; prints CSV and the doubling ratios.

    python scripts/bench_grid.py --sizes 125,250,500,1000 --reps 5
"""

import argparse
import sys

from lowdeg.cli import _csv, bench_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", default="grid")
    ap.add_argument("--sizes", default="125,250,500,1000")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--ordering", default="natural")
    args = ap.parse_args()
    rows = bench_rows(args.family, [int(s) for s in args.sizes.split(",")], args.reps, 0, args.ordering)
    sys.stdout.write(_csv(rows))
    for a, b in zip(rows, rows[1:]):
        print(f"m x{b['m'] / a['m']:.2f}  time x{b['median_s'] / a['median_s']:.2f}", file=sys.stderr)


if __name__ == "__main__":
    main()
