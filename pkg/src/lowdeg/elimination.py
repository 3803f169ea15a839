"""Rooted elimination trees of connected graphs and their structural checks."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Sequence

from lowdeg.graph import Graph, Ordering, connected_components, is_connected
from lowdeg.io import format_parent_array
from lowdeg.unionfind import DisjointSets


class NotConnectedError(ValueError):
    pass


@dataclass
class EliminationTree:
    """Parent map of a rooted tree, with eagerly computed depth and DFS intervals."""

    parent: list[int | None]
    root: int
    depth: list[int] = field(init=False, repr=False)
    children: list[list[int]] = field(init=False, repr=False)
    tin: list[int] = field(init=False, repr=False)
    tout: list[int] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.parent)
        roots = [v for v, p in enumerate(self.parent) if p is None]
        if roots != [self.root]:
            raise ValueError(f"expected exactly one root {self.root}, found {roots}")
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                if not 0 <= p < n:
                    raise ValueError(f"parent {p} of {v} out of range")
                children[p].append(v)
        depth = [-1] * n
        tin = [0] * n
        tout = [0] * n
        depth[self.root] = 0
        clock = 0
        stack = [(self.root, 0)]
        while stack:
            u, i = stack.pop()
            if i == 0:
                tin[u] = clock
                clock += 1
            if i < len(children[u]):
                stack.append((u, i + 1))
                c = children[u][i]
                depth[c] = depth[u] + 1
                stack.append((c, 0))
            else:
                tout[u] = clock
        if clock != n:
            raise ValueError("parent pointers contain a cycle or unreachable vertices")
        self.children = children
        self.depth = depth
        self.tin = tin
        self.tout = tout

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u is an ancestor of v (every vertex is its own ancestor)."""
        return self.tin[u] <= self.tin[v] < self.tout[u]

    def to_text(self) -> str:
        return format_parent_array(self.parent)


def elimination_parents(G: Graph, L: Ordering, ds: DisjointSets | None = None) -> list[int | None]:
    """Parent array of the elimination forest, via one decreasing-rank union-find scan.

    The classes of the processed suffix are the components of the graph it
    induces, each tagged with its L-smallest vertex; ``ds`` must be keyed by
    ``L.rank`` if supplied.
    """
    rank = L.rank
    if ds is None:
        ds = DisjointSets(G.n, key=rank)
    parent: list[int | None] = [None] * G.n
    adj = G.adj
    for u in reversed(L.position):
        ru = rank[u]
        for v in adj[u]:
            if rank[v] > ru and not ds.same(u, v):
                parent[ds.minimum(v)] = u
                ds.union(u, v)
    return parent


def elimination_tree(G: Graph, L: Ordering) -> EliminationTree:
    """Elimination tree S(G, L) of a connected graph; the root is the L-minimum vertex."""
    if len(L) != G.n:
        raise ValueError("ordering size does not match graph")
    if not is_connected(G):
        raise NotConnectedError(
            "elimination_tree needs a connected graph; use elimination_forest for "
            "per-component trees"
        )
    return EliminationTree(elimination_parents(G, L), L.position[0])


def elimination_forest(G: Graph, L: Ordering) -> list[tuple[list[int], EliminationTree]]:
    """Per-component elimination trees for a possibly disconnected graph.

    Each entry is ``(ids, tree)`` where the tree lives on the component
    relabelled densely and ``ids[i]`` is the original id of vertex i.
    """
    trees = []
    for comp in connected_components(G):
        H, old = G.induced(comp)
        sub = Ordering.from_positions(sorted(range(H.n), key=lambda i: L.rank[old[i]]))
        trees.append((old, elimination_tree(H, sub)))
    return trees


def subtree_members(S: EliminationTree, u: int) -> set[int]:
    out = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        out.update(S.children[x])
        stack.extend(S.children[x])
    return out


@dataclass
class EliminationReport:
    violations: dict[str, list[str]]

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": self.violations}


DIRECT_CONNECTIVITY_LIMIT = 2000


def check_eltree_properties(G: Graph, L: Ordering, S: EliminationTree | Sequence[int | None],
                            direct_limit: int = DIRECT_CONNECTIVITY_LIMIT) -> EliminationReport:
    """Check the four structural properties of an elimination tree.

    ``subtree_connected``: every G_u is connected. ``ancestors_smaller``:
    ancestors precede descendants in L. ``edges_vertical``: for every edge
    uv with u <_L v, u is an ancestor of v. ``child_adjacent``: every vertex
    has a neighbour in each child's subtree. Violations are collected, never
    raised. Connectivity of G_u is checked by BFS when n <= ``direct_limit``;
    above that it is derived from the other three properties, which imply it
    by induction on the tree.
    """
    kinds = ("tree", "subtree_connected", "ancestors_smaller", "edges_vertical", "child_adjacent")
    viol: dict[str, list[str]] = {k: [] for k in kinds}
    if not isinstance(S, EliminationTree):
        roots = [v for v, p in enumerate(S) if p is None]
        try:
            S = EliminationTree(list(S), roots[0] if len(roots) == 1 else -1)
        except (ValueError, IndexError) as exc:
            viol["tree"].append(str(exc))
            return EliminationReport(viol)
    if S.n != G.n:
        viol["tree"].append(f"tree has {S.n} vertices, graph has {G.n}")
        return EliminationReport(viol)
    rank = L.rank

    for v, p in enumerate(S.parent):
        if p is not None and rank[p] >= rank[v]:
            viol["ancestors_smaller"].append(f"parent {p} of {v} is not smaller in L")

    for u, nbrs in enumerate(G.adj):
        for v in nbrs:
            if rank[u] < rank[v] and not S.is_ancestor(u, v):
                viol["edges_vertical"].append(f"edge {u}-{v}: {u} is not an ancestor of {v}")

    for u in range(G.n):
        kids = sorted(S.children[u], key=S.tin.__getitem__)
        if not kids:
            continue
        starts = [S.tin[c] for c in kids]
        hit = [False] * len(kids)
        for x in G.adj[u]:
            if S.tin[u] < S.tin[x] < S.tout[u]:
                i = bisect_right(starts, S.tin[x]) - 1
                hit[i] = True
        for c, h in zip(kids, hit):
            if not h:
                viol["child_adjacent"].append(f"{u} has no neighbour in the subtree of child {c}")

    if G.n <= direct_limit:
        for u in range(G.n):
            members = subtree_members(S, u)
            seen = {u}
            stack = [u]
            while stack:
                x = stack.pop()
                for w in G.adj[x]:
                    if w in members and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(members):
                viol["subtree_connected"].append(f"G_{u} is disconnected")
    elif viol["edges_vertical"] or viol["child_adjacent"]:
        viol["subtree_connected"].append("not derivable: vertical-edge or child-adjacency checks failed")
    return EliminationReport(viol)
