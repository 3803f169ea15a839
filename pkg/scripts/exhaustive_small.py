"""Bound margins over every connected graph on up to N vertices, many orderings each.

    python scripts/exhaustive_small.py --max-n 6 --orderings 30 --out margins.csv
"""

import argparse
import csv
import math
import random
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from lowdeg import Graph, Ordering, augment, verify_augmentation


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--orderings", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for idx, g in enumerate(graph_atlas_g()):
        n = g.number_of_nodes()
        if n == 0 or n > args.max_n or not nx.is_connected(g):
            continue
        G = Graph.from_edges(n, g.edges())
        k = min(args.orderings, math.factorial(n))
        for j in range(k):
            L = Ordering.random(n, rng.randrange(2**32))
            A = augment(G, L)
            for r in (1, 2):
                rep = verify_augmentation(G, L, A, r=r)
                rows.append(dict(atlas=idx, n=n, m=G.m, ordering=j, r=r, col_2r=rep.col_2r,
                                 adm=rep.adm, bound=rep.bound, margin=rep.margin, ok=rep.ok))

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.DictWriter(out, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    worst = max(rows, key=lambda r: r["adm"] / r["col_2r"])
    print(f"{len(rows)} checks, {sum(not r['ok'] for r in rows)} violations, "
          f"largest adm/col_2r ratio {worst['adm'] / worst['col_2r']:.2f} (r={worst['r']})", file=sys.stderr)


if __name__ == "__main__":
    main()
