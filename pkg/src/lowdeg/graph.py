"""Undirected simple graphs on dense integer vertices, and vertex orderings."""

from __future__ import annotations

import random
from bisect import bisect_left
from collections import deque
from typing import Iterable, Sequence

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency lists are sorted and duplicate-free. Instances are treated as
    immutable once built; use :meth:`from_edges` or :meth:`plus_edges` to
    derive new graphs.
    """

    __slots__ = ("n", "adj", "m", "labels", "warnings")

    def __init__(self, n: int, adj: list[list[int]], *, labels=None, warnings=(), check=True):
        self.n = n
        self.adj = adj
        self.m = sum(len(a) for a in adj) // 2
        self.labels = labels
        self.warnings = tuple(warnings)
        if check:
            self.check()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], **kw) -> "Graph":
        """Build a graph, silently collapsing duplicates. Self-loops are rejected."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].append(v)
            adj[v].append(u)
        for i, a in enumerate(adj):
            if len(a) > 1:
                a.sort()
                if any(a[j] == a[j + 1] for j in range(len(a) - 1)):
                    adj[i] = sorted(set(a))
        return cls(n, adj, check=False, **kw)

    def check(self) -> None:
        """Assert simplicity and symmetry; raises ValueError on violation."""
        for u, nbrs in enumerate(self.adj):
            prev = -1
            for v in nbrs:
                if v <= prev:
                    raise ValueError(f"adjacency of {u} not strictly sorted")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if not self.has_edge(v, u):
                    raise ValueError(f"asymmetric adjacency {u}->{v}")
                prev = v

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[Edge]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    def plus_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        """The graph ``G + F``."""
        return Graph.from_edges(self.n, [*self.edges(), *extra])

    def minus_edge(self, u: int, v: int) -> "Graph":
        e = normalize_edge(u, v)
        return Graph.from_edges(self.n, [f for f in self.edges() if f != e])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; also returns new->old ids."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u in old for v in self.adj[u] if v in new and u < v]
        return Graph.from_edges(len(old), edges), old

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """A linear ordering of ``0..n-1``: ``rank[v]`` is the position of vertex v."""

    __slots__ = ("rank", "position")

    def __init__(self, rank: Sequence[int], position: Sequence[int] | None = None):
        rank = list(rank)
        n = len(rank)
        if position is None:
            position = [-1] * n
            for v, r in enumerate(rank):
                if not 0 <= r < n or position[r] != -1:
                    raise ValueError("rank is not a permutation of 0..n-1")
                position[r] = v
        else:
            position = list(position)
            if len(position) != n or any(rank[position[i]] != i for i in range(n)):
                raise ValueError("rank and position are not inverse bijections")
        self.rank = rank
        self.position = position

    @classmethod
    def from_positions(cls, position: Sequence[int]) -> "Ordering":
        """Ordering listing the vertices from smallest to largest."""
        position = list(position)
        n = len(position)
        rank = [-1] * n
        for i, v in enumerate(position):
            if not 0 <= v < n or rank[v] != -1:
                raise ValueError("position is not a permutation of 0..n-1")
            rank[v] = i
        return cls(rank, position)

    @classmethod
    def natural(cls, n: int) -> "Ordering":
        ident = list(range(n))
        return cls(ident, list(ident))

    @classmethod
    def random(cls, n: int, seed: int) -> "Ordering":
        position = list(range(n))
        random.Random(seed).shuffle(position)
        return cls.from_positions(position)

    def __len__(self) -> int:
        return len(self.rank)

    def less(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]

    def __eq__(self, other) -> bool:
        return isinstance(other, Ordering) and self.rank == other.rank

    def __repr__(self) -> str:
        if len(self.rank) <= 12:
            return f"Ordering({self.position})"
        return f"Ordering(n={len(self.rank)})"


def connected_components(G: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by minimum vertex."""
    seen = [False] * G.n
    comps = []
    adj = G.adj
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


def is_tree(n: int, edges: Sequence[Edge]) -> bool:
    """True iff ``(range(n), edges)`` is a tree (n-1 distinct edges, connected)."""
    if n == 0 or len(edges) != n - 1:
        return False
    try:
        T = Graph.from_edges(n, edges)
    except ValueError:
        return False
    return T.m == n - 1 and is_connected(T)
