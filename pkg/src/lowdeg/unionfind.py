"""Disjoint-set forest with union by size, path compression and a class-minimum payload."""

from __future__ import annotations

from typing import Sequence


class DisjointSets:
    """Union-find over ``0..n-1``.

    Each class carries the element of minimum ``key`` (by default the
    minimum id). The elimination tree and backbone scans key by ordering
    rank, so ``minimum(x)`` is the L-smallest vertex of x's class.
    """

    __slots__ = ("parent", "size", "_low", "_key", "finds", "unions")

    def __init__(self, n: int, key: Sequence[int] | None = None):
        if key is not None and len(key) != n:
            raise ValueError("key must have one entry per element")
        self.parent = list(range(n))
        self.size = [1] * n
        self._low = list(range(n))
        self._key = list(range(n)) if key is None else key
        self.finds = 0
        self.unions = 0

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.parent):
            raise IndexError(f"element {v} out of range 0..{len(self.parent) - 1}")

    def find(self, v: int) -> int:
        self._check(v)
        self.finds += 1
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(self, u: int, v: int) -> bool:
        """Merge the classes of u and v; False if they were already one class."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.unions += 1
        size = self.size
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        size[ru] += size[rv]
        key = self._key
        if key[self._low[rv]] < key[self._low[ru]]:
            self._low[ru] = self._low[rv]
        return True

    def minimum(self, v: int) -> int:
        """Minimum-key element of v's class."""
        return self._low[self.find(v)]

    def same(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def classes(self) -> list[list[int]]:
        """The partition, each class sorted, classes ordered by minimum id."""
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        return sorted(groups.values())
