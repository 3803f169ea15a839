"""Readers and writers for edge lists, DIMACS graphs, orderings and trees."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Sequence

from lowdeg.graph import Edge, Graph, Ordering

log = logging.getLogger(__name__)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _content_lines(text: str, comment: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(comment, 1)[0].strip() if comment == "#" else raw.strip()
        if line:
            yield lineno, line


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


class _EdgeCollector:
    """Accumulates edges, dropping self-loops and duplicates with a warning."""

    def __init__(self, n: int, strict: bool):
        self.n = n
        self.strict = strict
        self.seen: set[Edge] = set()
        self.edges: list[Edge] = []
        self.warnings: list[str] = []
        self.lines = 0

    def add(self, u: int, v: int, lineno: int) -> None:
        self.lines += 1
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ParseError(f"vertex id out of range for n={self.n}", lineno)
        if u == v:
            if self.strict:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            self._warn(f"line {lineno}: dropped self-loop at vertex {u}")
            return
        e = (u, v) if u < v else (v, u)
        if e in self.seen:
            if self.strict:
                raise ParseError(f"duplicate edge {e}", lineno)
            self._warn(f"line {lineno}: dropped duplicate edge {e}")
            return
        self.seen.add(e)
        self.edges.append(e)

    def _warn(self, msg: str) -> None:
        log.warning(msg)
        self.warnings.append(msg)

    def graph(self, declared_m: int | None, labels=None) -> Graph:
        if declared_m is not None and declared_m != self.lines:
            self._warn(f"header declares {declared_m} edges, found {self.lines} edge lines")
        return Graph.from_edges(self.n, self.edges, labels=labels, warnings=self.warnings)


def parse_edge_list(text: str, *, strict: bool = False) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format (0-based, '#' comments)."""
    lines = _content_lines(text, "#")
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: missing 'n m' header") from None
    head = header.split()
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = _ints(head, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative counts in header", lineno)
    acc = _EdgeCollector(n, strict)
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _ints(parts, lineno)
        acc.add(u, v, lineno)
    return acc.graph(m)


def parse_labelled_edge_list(text: str, *, strict: bool = False) -> Graph:
    """Parse a headerless edge list with arbitrary tokens as vertex labels.

    Labels are numbered densely in order of first appearance; the label table
    is kept on ``Graph.labels`` (index = vertex id).
    """
    ids: dict[str, int] = {}
    pairs = []
    for lineno, line in _content_lines(text, "#"):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        pairs.append((ids.setdefault(parts[0], len(ids)), ids.setdefault(parts[1], len(ids)), lineno))
    acc = _EdgeCollector(len(ids), strict)
    for u, v, lineno in pairs:
        acc.add(u, v, lineno)
    return acc.graph(None, labels=list(ids))


def parse_dimacs(text: str, *, strict: bool = False) -> Graph:
    """Parse DIMACS-style ``p tw n m`` / ``p edge n m`` files with 1-based ids.

    Edge lines may be ``e u v`` or bare ``u v`` (PACE .gr style).
    """
    acc = None
    declared_m = None
    for lineno, line in _content_lines(text, "#"):
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            continue
        if tag == "p":
            if acc is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(parts) != 4 or parts[1] not in ("tw", "edge", "col"):
                raise ParseError("expected 'p tw n m' or 'p edge n m'", lineno)
            n, declared_m = _ints(parts[2:], lineno)
            acc = _EdgeCollector(n, strict)
            continue
        if acc is None:
            raise ParseError("edge before 'p' line", lineno)
        if tag == "e":
            parts = parts[1:]
        if len(parts) != 2:
            raise ParseError(f"malformed edge line {line!r}", lineno)
        u, v = _ints(parts, lineno)
        if u < 1 or v < 1:
            raise ParseError("DIMACS vertex ids are 1-based", lineno)
        acc.add(u - 1, v - 1, lineno)
    if acc is None:
        raise ParseError("missing 'p' line")
    return acc.graph(declared_m)


def read_graph(path: str | Path, *, strict: bool = False) -> Graph:
    """Read a graph file, detecting DIMACS by a leading 'c' or 'p' line."""
    text = Path(path).read_text()
    for _, line in _content_lines(text, "#"):
        if line.split()[0] in ("c", "p"):
            return parse_dimacs(text, strict=strict)
        break
    return parse_edge_list(text, strict=strict)


def format_edge_list(n: int, edges: Iterable[Sequence[int]]) -> str:
    edges = list(edges)
    lines = [f"{n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_edge_list(path: str | Path, n: int, edges: Iterable[Sequence[int]]) -> None:
    Path(path).write_text(format_edge_list(n, edges))


def parse_ordering(text: str, n: int | None = None) -> Ordering:
    """One vertex per line, smallest first."""
    position = []
    for lineno, line in _content_lines(text, "#"):
        parts = line.split()
        if len(parts) != 1:
            raise ParseError("expected one vertex per line", lineno)
        position.extend(_ints(parts, lineno))
    if n is not None and len(position) != n:
        raise ParseError(f"ordering lists {len(position)} vertices, graph has {n}")
    try:
        return Ordering.from_positions(position)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_ordering(L: Ordering) -> str:
    return "".join(f"{v}\n" for v in L.position)


def format_parent_array(parent: Sequence[int | None]) -> str:
    """``vertex parent`` per line, root's parent written as '-'."""
    return "".join(f"{v} {'-' if p is None else p}\n" for v, p in enumerate(parent))


def parse_parent_array(text: str) -> list[int | None]:
    parent: dict[int, int | None] = {}
    for lineno, line in _content_lines(text, "#"):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'vertex parent'", lineno)
        v = _ints(parts[:1], lineno)[0]
        parent[v] = None if parts[1] == "-" else _ints(parts[1:], lineno)[0]
    if sorted(parent) != list(range(len(parent))):
        raise ParseError("parent array must list every vertex 0..n-1 once")
    return [parent[v] for v in range(len(parent))]
