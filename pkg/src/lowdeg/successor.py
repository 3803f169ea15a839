"""From a low-degree spanning tree to a k-walk and a successor relation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from lowdeg.graph import Graph, is_connected


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    @cached_property
    def counts(self) -> Counter:
        return Counter(self.vertices)

    def max_visits(self) -> int:
        return max(self.counts.values(), default=0)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SuccessorRelation:
    order: tuple[int, ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.order, self.order[1:]))

    def to_text(self) -> str:
        return "".join(f"{v}\n" for v in self.order)


def tree_to_kwalk(T: Graph, k: int = 3, closed: bool = True) -> Walk:
    """Euler tour of T from its lowest-id leaf, children visited by increasing id.

    Every non-root vertex occurs exactly deg_T(v) times and the leaf root
    twice (once when ``closed=False``), so a tree of maximum degree k gives
    a k-walk.
    """
    n = T.n
    if n == 0:
        raise ValueError("empty tree")
    if T.m != n - 1 or not is_connected(T):
        raise ValueError("input is not a tree")
    worst = max(range(n), key=T.degree)
    if T.degree(worst) > k:
        raise ValueError(f"vertex {worst} has degree {T.degree(worst)} > {k}")
    root = next(v for v in range(n) if T.degree(v) <= 1)
    adj = T.adj
    walk = [root]
    stack = [(root, -1, 0)]
    while stack:
        u, par, i = stack.pop()
        nbrs = adj[u]
        while i < len(nbrs) and nbrs[i] == par:
            i += 1
        if i < len(nbrs):
            stack.append((u, par, i + 1))
            c = nbrs[i]
            walk.append(c)
            stack.append((c, u, 0))
        elif par >= 0:
            walk.append(par)
    if not closed and n > 1:
        walk.pop()
    return Walk(tuple(walk))


def walk_to_successor(W: Walk) -> SuccessorRelation:
    """Vertices in order of first visit."""
    seen = set()
    order = []
    for v in W.vertices:
        if v not in seen:
            seen.add(v)
            order.append(v)
    return SuccessorRelation(tuple(order))


def verify_successor(S: SuccessorRelation, n: int) -> bool:
    """True iff S lists each of ``0..n-1`` exactly once, i.e. forms one directed path."""
    order = S.order
    return len(order) == n and sorted(order) == list(range(n)) and len(S.pairs) == max(n - 1, 0)
