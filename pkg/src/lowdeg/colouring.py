"""Strong reachability, r-colouring numbers and r-admissibility.

All functions take a :class:`Graph` and an :class:`Ordering`; "smaller"
always means smaller rank in the ordering. Reachability sets include the
start vertex.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from lowdeg.graph import Graph, Ordering

DEFAULT_BUDGET = 200_000


class AdmissibilityBudgetExceeded(RuntimeError):
    """Exact admissibility search ran out of its node budget.

    ``lower_bound`` is the best family size found before giving up; it is
    *not* the admissibility.
    """

    def __init__(self, vertex: int, budget: int, lower_bound: int):
        self.vertex = vertex
        self.budget = budget
        self.lower_bound = lower_bound
        super().__init__(
            f"exact admissibility of vertex {vertex} exceeded budget of {budget} nodes "
            f"(best family found: {lower_bound})"
        )


@dataclass(frozen=True)
class PathFamily:
    start: int
    r: int
    paths: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.paths)

    def violations(self, G: Graph, L: Ordering) -> list[str]:
        """Reasons this family is not a valid admissibility certificate."""
        rank = L.rank
        rv = rank[self.start]
        out = []
        seen: set[int] = set()
        for p in self.paths:
            if p[0] != self.start or len(p) < 2:
                out.append(f"{p}: must start at {self.start} and have length >= 1")
                continue
            if len(p) - 1 > self.r:
                out.append(f"{p}: longer than {self.r}")
            if any(not G.has_edge(a, b) for a, b in zip(p, p[1:])):
                out.append(f"{p}: not a walk in the graph")
            if rank[p[-1]] >= rv:
                out.append(f"{p}: endpoint not smaller than start")
            if any(rank[x] <= rv for x in p[1:-1]):
                out.append(f"{p}: internal vertex not larger than start")
            if len(set(p)) != len(p):
                out.append(f"{p}: repeats a vertex")
            if seen.intersection(p[1:]):
                out.append(f"{p}: shares a vertex with another path")
            seen.update(p[1:])
        return out

    def is_valid(self, G: Graph, L: Ordering) -> bool:
        return not self.violations(G, L)

    def to_dict(self) -> dict:
        return {"vertex": self.start, "r": self.r, "value": len(self.paths),
                "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class ColProfile:
    r: int
    sizes: tuple[int, ...]
    value: int
    argmax: int | None

    def to_dict(self) -> dict:
        return {"r": self.r, "col": self.value, "argmax": self.argmax}


def sreach(G: Graph, L: Ordering, v: int, r: int) -> set[int]:
    """Vertices strongly r-reachable from v (v included)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    rank = L.rank
    rv = rank[v]
    adj = G.adj
    seen = {v}
    reached = {v}
    frontier = [v]
    for _ in range(r):
        nxt = []
        for x in frontier:
            for w in adj[x]:
                if w in seen:
                    continue
                seen.add(w)
                if rank[w] < rv:
                    reached.add(w)
                else:
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return reached


def col(G: Graph, L: Ordering, r: int) -> ColProfile:
    sizes = tuple(len(sreach(G, L, v, r)) for v in range(G.n))
    if not sizes:
        return ColProfile(r, (), 0, None)
    best = max(sizes)
    return ColProfile(r, sizes, best, sizes.index(best))


def valid_paths(G: Graph, L: Ordering, v: int, r: int) -> list[tuple[int, ...]]:
    """Every admissibility path from v of length <= r, in DFS order."""
    rank = L.rank
    rv = rank[v]
    adj = G.adj
    out: list[tuple[int, ...]] = []
    path = [v]
    on_path = {v}

    def extend():
        x = path[-1]
        for w in adj[x]:
            if rank[w] < rv:
                out.append((*path, w))
            elif w not in on_path and len(path) < r:
                path.append(w)
                on_path.add(w)
                extend()
                on_path.discard(w)
                path.pop()

    if r >= 1:
        extend()
    return out


def adm_greedy_lower(G: Graph, L: Ordering, v: int, r: int) -> tuple[int, PathFamily]:
    """Greedy admissibility lower bound.

    Repeatedly takes a shortest remaining valid path (BFS, neighbours in
    increasing id) avoiding vertices already used, until none is left.
    """
    rank = L.rank
    rv = rank[v]
    adj = G.adj
    used = {v}
    paths = []
    while True:
        parent = {v: -1}
        frontier = [v]
        found = -1
        for _ in range(r):
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w in used or w in parent:
                        continue
                    parent[w] = x
                    if rank[w] < rv:
                        found = w
                        break
                    nxt.append(w)
                if found >= 0:
                    break
            if found >= 0 or not nxt:
                break
            frontier = nxt
        if found < 0:
            break
        p = [found]
        while parent[p[-1]] != -1:
            p.append(parent[p[-1]])
        p.reverse()
        paths.append(tuple(p))
        used.update(p)
    return len(paths), PathFamily(v, r, tuple(paths))


@dataclass
class _Search:
    budget: int
    best: list = field(default_factory=list)
    nodes: int = 0


def _pack(groups, used, chosen, st: _Search, vertex: int) -> None:
    st.nodes += 1
    if st.nodes > st.budget:
        raise AdmissibilityBudgetExceeded(vertex, st.budget, len(st.best))
    if len(chosen) > len(st.best):
        st.best = list(chosen)
    live = []
    firsts = 0
    for g in groups:
        opts = [p for p in g if not p[0] & used]
        if opts:
            live.append(opts)
            for p in opts:
                firsts |= p[1]
    if len(chosen) + min(len(live), firsts.bit_count()) <= len(st.best):
        return
    head, rest = live[0], live[1:]
    for p in head:
        chosen.append(p)
        _pack(rest, used | p[0], chosen, st, vertex)
        chosen.pop()
    _pack(rest, used, chosen, st, vertex)


def adm_exact(G: Graph, L: Ordering, v: int, r: int, budget: int = DEFAULT_BUDGET) -> tuple[int, PathFamily]:
    """Exact r-admissibility of v by branch and bound over valid paths.

    All valid paths are enumerated and grouped by endpoint; a maximum family
    of pairwise disjoint paths (apart from v) is then searched for, bounded
    by the number of live endpoints and of unused first steps. Raises
    :class:`AdmissibilityBudgetExceeded` when more than ``budget`` search
    nodes are needed.
    """
    paths = valid_paths(G, L, v, r)
    if not paths:
        return 0, PathFamily(v, r)
    by_end: dict[int, list] = {}
    for p in sorted(paths, key=lambda p: (len(p), p)):
        mask = 0
        for x in p[1:]:
            mask |= 1 << x
        by_end.setdefault(p[-1], []).append((mask, 1 << p[1], p))
    groups = sorted(by_end.values(), key=lambda g: (len(g), g[0][2][-1]))
    _, greedy = adm_greedy_lower(G, L, v, r)
    st = _Search(budget)
    st.best = [(0, 0, p) for p in greedy.paths]
    _pack(groups, 0, [], st, v)
    fam = tuple(sorted((p[2] for p in st.best), key=lambda p: (len(p), p)))
    return len(fam), PathFamily(v, r, fam)


def adm_vertices(G: Graph, L: Ordering, r: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, PathFamily]]:
    return [adm_exact(G, L, v, r, budget) for v in range(G.n)]


def adm_graph(G: Graph, L: Ordering, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exact r-admissibility of G under L; raises if any vertex exceeds the budget."""
    return max((adm_exact(G, L, v, r, budget)[0] for v in range(G.n)), default=0)


def degeneracy_ordering(G: Graph) -> Ordering:
    """Min-degree elimination, ties to the lowest id; first removed gets the largest rank."""
    n = G.n
    adj = G.adj
    deg = [len(a) for a in adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * n
    position = [0] * n
    slot = n - 1
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        position[slot] = v
        slot -= 1
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return Ordering.from_positions(position)


BRUTEFORCE_MAX_N = 9


def best_ordering_bruteforce(G: Graph, r: int, measure: str = "adm",
                             budget: int = DEFAULT_BUDGET) -> tuple[Ordering, int]:
    """Minimise adm_r(G, L) (or col_r with ``measure="col"``) over all orderings.

    Test oracle only: factorial time, refused for more than 9 vertices.
    The first minimiser in lexicographic order of position lists is returned.
    """
    if G.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute-force ordering search refused for n={G.n} > {BRUTEFORCE_MAX_N}")
    if measure == "adm":
        score = lambda L: adm_graph(G, L, r, budget)  # noqa: E731
    elif measure == "col":
        score = lambda L: col(G, L, r).value  # noqa: E731
    else:
        raise ValueError(f"unknown measure {measure!r}")
    best = None
    for perm in itertools.permutations(range(G.n)):
        L = Ordering.from_positions(perm)
        val = score(L)
        if best is None or val < best[1]:
            best = (L, val)
    if best is None:
        return Ordering.natural(0), 0
    return best
