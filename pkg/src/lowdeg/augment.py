"""Degree-3 spanning trees built from a vertex ordering.

Pipeline: a union-find scan in decreasing rank yields the backbone tree U
(one G-edge from each vertex into each of its elimination-tree child
subtrees). Rooting U at the L-minimum vertex, each vertex u is joined to its
L-smallest U-child and its U-children are chained in L order; the result T
has maximum degree 3. Components are linked by a path through one low-degree
vertex of each.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from lowdeg.colouring import (
    DEFAULT_BUDGET,
    AdmissibilityBudgetExceeded,
    PathFamily,
    adm_exact,
    adm_greedy_lower,
    col,
)
from lowdeg.elimination import NotConnectedError
from lowdeg.graph import Edge, Graph, Ordering, connected_components, is_connected, is_tree, normalize_edge
from lowdeg.unionfind import DisjointSets

log = logging.getLogger(__name__)

EXACT_MAX_N = 12


@dataclass
class BackboneTree:
    """Spanning forest U with B ⊆ E(G), rooted at each component's L-minimum."""

    graph: Graph
    edges: list[Edge]
    roots: list[int]
    parent: list[int] = field(repr=False)
    children: list[list[int]] = field(repr=False)

    @property
    def root(self) -> int:
        if len(self.roots) != 1:
            raise ValueError("backbone is a forest with several roots")
        return self.roots[0]

    @classmethod
    def from_edges(cls, G: Graph, edges: Sequence[Sequence[int]], L: Ordering) -> "BackboneTree":
        """Root a given edge set at each component's L-minimum vertex."""
        edges = [normalize_edge(u, v) for u, v in edges]
        parent, children, roots = _orient(G.n, edges, L)
        return cls(G, edges, roots, parent, children)

    def violations(self, L: Ordering) -> list[str]:
        G = self.graph
        out = []
        ncomp = len(connected_components(G))
        if len(self.edges) != G.n - ncomp:
            out.append(f"|B| = {len(self.edges)}, expected {G.n - ncomp}")
        out += [f"backbone edge {e} not in G" for e in self.edges if not G.has_edge(*e)]
        if len(self.roots) != ncomp:
            out.append("backbone does not span each component")
        return out


def _orient(n: int, edges: Sequence[Edge], L: Ordering):
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rank = L.rank
    parent = [-2] * n
    children: list[list[int]] = [[] for _ in range(n)]
    roots = []
    for s in L.position:
        if parent[s] != -2:
            continue
        roots.append(s)
        parent[s] = -1
        stack = [s]
        while stack:
            u = stack.pop()
            kids = children[u]
            for w in adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    kids.append(w)
                    stack.append(w)
                elif w != parent[u]:
                    raise ValueError("backbone edges contain a cycle")
            kids.sort(key=rank.__getitem__)
    return parent, children, roots


def backbone_scan(G: Graph, L: Ordering, ds: DisjointSets | None = None) -> list[Edge]:
    """Backbone edges for every component at once.

    Vertices are processed by decreasing rank; each larger neighbour is
    visited in increasing rank and its edge kept iff it joins two classes,
    so the kept neighbour in each child subtree is the L-smallest one.
    """
    if len(L) != G.n:
        raise ValueError("ordering size does not match graph")
    rank = L.rank
    adj = G.adj
    if ds is None:
        ds = DisjointSets(G.n)
    find = ds.find
    union = ds.union
    B: list[Edge] = []
    for u in reversed(L.position):
        ru = rank[u]
        up = [v for v in adj[u] if rank[v] > ru]
        if not up:
            continue
        if len(up) > 1:
            up.sort(key=rank.__getitem__)
        for v in up:
            if find(u) != find(v):
                union(u, v)
                B.append((u, v) if u < v else (v, u))
    return B


def build_backbone(G: Graph, L: Ordering) -> BackboneTree:
    """Backbone tree U of a connected graph."""
    if not is_connected(G):
        raise NotConnectedError("build_backbone needs a connected graph; use augment for general input")
    B = backbone_scan(G, L)
    parent, children, roots = _orient(G.n, B, L)
    return BackboneTree(G, B, roots, parent, children)


@dataclass
class Augmentation:
    """The tree T = (V, F) with provenance of every edge.

    ``owner[i]`` is the vertex u whose group F_u produced ``F[i]`` (-1 for an
    edge chaining two components); for a new sibling edge this is its
    origin, a common G-neighbour of both endpoints. ``is_new[i]`` marks edges
    absent from G.
    """

    n: int
    F: list[Edge]
    owner: list[int]
    is_new: list[bool]
    u_parent: list[int] = field(repr=False)
    components: list[list[int]] = field(default_factory=list, repr=False)
    chain_vertices: list[int] = field(default_factory=list)

    @property
    def F_new(self) -> list[tuple[Edge, int | None]]:
        """New edges with their origin (None for component-chain edges)."""
        return [(e, o if o >= 0 else None) for e, o, new in zip(self.F, self.owner, self.is_new) if new]

    @property
    def chain_edges(self) -> list[Edge]:
        return [e for e, o in zip(self.F, self.owner) if o < 0]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.F:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees()).items()))

    def tree_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.F)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "component_count": len(self.components),
            "F": [list(e) for e in self.F],
            "F_new": [{"edge": list(e), "origin": o} for e, o in self.F_new],
            "chain_vertices": self.chain_vertices,
            "degree_histogram": {str(k): v for k, v in self.degree_histogram().items()},
        }


def build_degree3_tree(U: BackboneTree, L: Ordering) -> Augmentation:
    """Replace each vertex's U-star by an edge to its first child plus a sibling chain."""
    G = U.graph
    rank = L.rank
    F: list[Edge] = []
    owner: list[int] = []
    is_new: list[bool] = []
    for u in L.position:
        kids = U.children[u]
        if not kids:
            continue
        if any(rank[a] >= rank[b] for a, b in zip(kids, kids[1:])):
            kids = sorted(kids, key=rank.__getitem__)
        prev = u
        for x in kids:
            e = (prev, x) if prev < x else (x, prev)
            F.append(e)
            owner.append(u)
            is_new.append(not G.has_edge(prev, x))
            prev = x
    return Augmentation(G.n, F, owner, is_new, U.parent, connected_components(G))


def augment(G: Graph, L: Ordering) -> Augmentation:
    """Degree-3 spanning tree of any non-empty graph.

    Each component gets its own tree; then the L-smallest vertex of degree
    at most 1 in each component tree is picked and these vertices are joined
    by a path, components taken by increasing minimum id.
    """
    if G.n == 0:
        raise ValueError("cannot augment the empty graph")
    if len(L) != G.n:
        raise ValueError("ordering size does not match graph")
    B = backbone_scan(G, L)
    parent, children, roots = _orient(G.n, B, L)
    A = build_degree3_tree(BackboneTree(G, B, roots, parent, children), L)
    if len(A.components) > 1:
        deg = A.degrees()
        rank = L.rank
        picks = [min((v for v in comp if deg[v] <= 1), key=rank.__getitem__) for comp in A.components]
        for a, b in zip(picks, picks[1:]):
            A.F.append(normalize_edge(a, b))
            A.owner.append(-1)
            A.is_new.append(True)
        A.chain_vertices = picks
    return A


@dataclass
class AugmentationReport:
    checks: dict[str, bool]
    violations: list[str]
    r: int | None = None
    connected: bool = True
    col_2r: int | None = None
    adm: int | None = None
    adm_exact: bool = False
    adm_certificate: PathFamily | None = None
    bound: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def margin(self) -> int | None:
        if self.bound is None or self.adm is None:
            return None
        return self.bound - self.adm

    def to_dict(self) -> dict:
        d = {
            "ok": self.ok,
            "checks": self.checks,
            "violations": self.violations,
        }
        if self.r is not None:
            d["bound_report"] = {
                "r": self.r,
                "connected": self.connected,
                "col_2r": self.col_2r,
                "adm_r": self.adm,
                "adm_exact": self.adm_exact,
                "bound": self.bound,
                "margin": self.margin,
                "margin_vs_3col": 3 * self.col_2r - self.adm,
                "margin_vs_2_plus_2col": 2 + 2 * self.col_2r - self.adm,
                "certificate": self.adm_certificate.to_dict() if self.adm_certificate else None,
            }
        return d


def structural_violations(G: Graph, F: Sequence[Edge], owner: Sequence[int] | None = None,
                          is_new: Sequence[bool] | None = None,
                          u_parent: Sequence[int] | None = None) -> tuple[dict[str, bool], list[str]]:
    """Spanning-tree, degree, origin-adjacency and degree-decomposition checks.

    With only ``F`` given (an externally supplied tree) the origin check
    falls back to asking for any common G-neighbour of each new edge.
    """
    n = G.n
    out: list[str] = []
    checks: dict[str, bool] = {}

    def record(name: str, msgs: list[str]):
        checks[name] = not msgs
        out.extend(msgs)

    record("spanning_tree", [] if is_tree(n, list(F)) else [f"(V, F) is not a spanning tree ({len(F)} edges, n={n})"])
    deg = [0] * n
    for u, v in F:
        deg[u] += 1
        deg[v] += 1
    record("max_degree_3", [f"vertex {v} has degree {d} in T" for v, d in enumerate(deg) if d > 3][:50])

    origin_msgs = []
    if owner is not None:
        for (x, y), a, new in zip(F, owner, is_new):
            if new and a >= 0 and not (G.has_edge(a, x) and G.has_edge(a, y)):
                origin_msgs.append(f"new edge {x}-{y}: origin {a} not adjacent to both ends")
            if not new and not G.has_edge(x, y):
                origin_msgs.append(f"edge {x}-{y} marked old but absent from G")
    else:
        for x, y in F:
            if not G.has_edge(x, y) and not set(G.adj[x]).intersection(G.adj[y]):
                origin_msgs.append(f"new edge {x}-{y}: endpoints have no common neighbour")
    record("origin_adjacent", origin_msgs[:50])

    if owner is not None and u_parent is not None:
        own = [0] * n
        sib = [0] * n
        chain = [0] * n
        msgs = []
        for (x, y), a in zip(F, owner):
            for z in (x, y):
                if a < 0:
                    chain[z] += 1
                elif a == z:
                    own[z] += 1
                elif u_parent[z] == a:
                    sib[z] += 1
                else:
                    msgs.append(f"edge {x}-{y} from group of {a} touches {z}, not {a} or its U-child")
        for v in range(n):
            if own[v] > 1 or sib[v] > 2 or chain[v] > 2 or (chain[v] and own[v] + sib[v] > 1):
                msgs.append(f"vertex {v}: first-child {own[v]}, sibling {sib[v]}, chain {chain[v]}")
        record("degree_decomposition", msgs[:50])
    return checks, out


def verify_augmentation(G: Graph, L: Ordering, A: Augmentation, r: int | None = None,
                        budget: int | None = None, exact_max_n: int = EXACT_MAX_N) -> AugmentationReport:
    """Structural checks on T plus, for a given r, the admissibility bound.

    The bound is 3·col_2r(G, L) for connected G and 2 + 3·col_2r(G, L)
    otherwise. adm_r(G + F, L) is computed exactly when ``budget`` is given
    or n <= ``exact_max_n``; if the exact search runs out of budget, or is
    not attempted, the greedy lower bound is reported and flagged inexact.
    """
    checks, violations = structural_violations(G, A.F, A.owner, A.is_new, A.u_parent)
    rep = AugmentationReport(checks, violations)
    if r is None:
        return rep
    rep.r = r
    rep.connected = is_connected(G)
    rep.col_2r = col(G, L, 2 * r).value
    rep.bound = 3 * rep.col_2r if rep.connected else 2 + 3 * rep.col_2r
    H = G.plus_edges(A.F)
    rep.adm, rep.adm_exact, rep.adm_certificate = admissibility(H, L, r, budget, exact_max_n)
    ok = rep.adm <= rep.bound
    rep.checks["adm_bound"] = ok
    if not ok:
        kind = "adm" if rep.adm_exact else "adm lower bound"
        rep.violations.append(f"{kind} {rep.adm} exceeds bound {rep.bound} (r={r}, col_2r={rep.col_2r})")
    log.debug("bound margin %s (3col margin %s)", rep.margin, 3 * rep.col_2r - rep.adm)
    return rep


def admissibility(H: Graph, L: Ordering, r: int, budget: int | None = None,
                  exact_max_n: int = EXACT_MAX_N) -> tuple[int, bool, PathFamily | None]:
    """(value, exact?, certificate of a maximising vertex)."""
    best: tuple[int, PathFamily | None] = (0, None)
    if budget is not None or H.n <= exact_max_n:
        try:
            for v in range(H.n):
                val, fam = adm_exact(H, L, v, r, DEFAULT_BUDGET if budget is None else budget)
                if best[1] is None or val > best[0]:
                    best = (val, fam)
            return best[0], True, best[1]
        except AdmissibilityBudgetExceeded as exc:
            log.info("%s; falling back to greedy lower bound", exc)
    best = (0, None)
    for v in range(H.n):
        val, fam = adm_greedy_lower(H, L, v, r)
        if best[1] is None or val > best[0]:
            best = (val, fam)
    return best[0], False, best[1]
