"""Deterministic graph generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from lowdeg.graph import Graph

FIGURE1_EDGES = [
    (0, 1), (1, 11), (6, 11), (11, 19), (2, 6), (2, 8), (8, 12), (8, 16),
    (2, 10), (3, 10), (3, 14), (1, 21), (15, 21), (15, 22), (15, 20), (15, 17),
    (13, 15), (7, 15), (4, 15), (4, 5), (7, 9), (13, 18), (10, 14), (0, 21),
]
# Tree U drawn over the example graph, and the resulting degree-3 tree T.
FIGURE1_BACKBONE = [
    (0, 1), (1, 11), (6, 11), (11, 19), (2, 6), (2, 8), (8, 12), (8, 16),
    (2, 10), (3, 10), (10, 14), (1, 21), (15, 21), (15, 22), (15, 20), (15, 17),
    (4, 15), (7, 15), (13, 15), (13, 18), (7, 9), (4, 5),
]
FIGURE2_TREE = [
    (0, 1), (1, 11), (6, 11), (6, 19), (2, 6), (8, 10), (8, 12), (12, 16),
    (2, 8), (3, 10), (3, 14), (11, 21), (15, 21), (13, 17), (20, 22), (17, 20),
    (4, 15), (4, 7), (7, 13), (13, 18), (7, 9), (4, 5),
]
# Elimination tree of the example graph under the numeric ordering, as (parent, child).
FIGURE1_ELIMINATION = [
    (0, 1), (1, 2), (1, 4), (2, 3), (2, 6), (4, 5), (10, 14), (3, 10), (2, 8), (8, 12), (8, 16),
    (11, 19), (6, 11), (4, 7), (7, 13), (7, 9), (13, 15), (13, 18), (15, 17), (15, 21), (15, 22), (15, 20),
]


def figure1() -> Graph:
    return Graph.from_edges(23, FIGURE1_EDGES)


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for i in range(rows):
        base = i * cols
        for j in range(cols):
            v = base + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def torus(rows: int, cols: int) -> Graph:
    if rows < 3 or cols < 3:
        raise ValueError("torus needs at least 3 rows and 3 columns")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            edges.append((v, i * cols + (j + 1) % cols))
            edges.append((v, ((i + 1) % rows) * cols + j))
    return Graph.from_edges(rows * cols, edges)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Centre 0 joined to leaves 1..n-1."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def clique(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with exactly m edges."""
    if m > n * (n - 1) // 2:
        raise ValueError(f"too many edges: {m} > {n * (n - 1) // 2}")
    rng = random.Random(seed)
    seen = set()
    edges = []
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Graph.from_edges(n, edges)


def random_regular(n: int, d: int, seed: int, tries: int = 1000) -> Graph:
    """Random d-regular simple graph by the pairing model with restarts."""
    if n * d % 2 or d >= n:
        raise ValueError("need n*d even and d < n")
    rng = random.Random(seed)
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, sorted(edges))
    raise RuntimeError(f"no simple {d}-regular graph found in {tries} attempts")


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random spanning tree plus ``extra`` random further edges (capped at complete)."""
    rng = random.Random(seed)
    edges = {tuple(sorted((v, rng.randrange(v)))) for v in range(1, n)}
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
    target = min(len(edges) + extra, n * (n - 1) // 2)
    while len(edges) < target:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def random_components(sizes: list[int], extra: int, seed: int) -> Graph:
    """Disjoint union of connected random graphs, vertex ids shuffled."""
    rng = random.Random(seed)
    n = sum(sizes)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    offset = 0
    for k, size in enumerate(sizes):
        part = random_connected(size, rng.randrange(extra + 1), rng.randrange(2**32))
        edges += [(perm[offset + u], perm[offset + v]) for u, v in part.edges()]
        offset += size
    return Graph.from_edges(n, edges)


FAMILIES = {
    "grid": (grid, ("rows", "cols")),
    "torus": (torus, ("rows", "cols")),
    "random_gnm": (random_gnm, ("n", "m", "seed")),
    "random_regular": (random_regular, ("n", "d", "seed")),
    "random_connected": (random_connected, ("n", "extra", "seed")),
    "star": (star, ("n",)),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "clique": (clique, ("n",)),
    "figure1": (figure1, ()),
}


@dataclass
class GeneratorSpec:
    family: str
    params: dict[str, int] = field(default_factory=dict)
    seed: int = 0

    def build(self) -> Graph:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        fn, names = FAMILIES[self.family]
        args = dict(self.params)
        if "seed" in names:
            args.setdefault("seed", self.seed)
        missing = [k for k in names if k not in args]
        unknown = [k for k in args if k not in names]
        if missing or unknown:
            raise ValueError(f"{self.family} takes {list(names)}; missing {missing}, unknown {unknown}")
        return fn(**{k: args[k] for k in names})

    def describe(self) -> dict:
        return {"family": self.family, **self.params, "seed": self.seed}
