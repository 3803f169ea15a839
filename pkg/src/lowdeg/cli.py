"""Command-line front end: ``lowdeg {gen,augment,verify,succ,bench,suite}``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from lowdeg.augment import (
    BackboneTree,
    _orient,
    admissibility,
    augment,
    backbone_scan,
    build_degree3_tree,
    structural_violations,
    verify_augmentation,
)
from lowdeg.colouring import col, degeneracy_ordering
from lowdeg.elimination import check_eltree_properties, elimination_forest
from lowdeg.generators import GeneratorSpec, random_components, random_connected
from lowdeg.graph import Graph, Ordering, is_connected
from lowdeg.io import ParseError, format_edge_list, parse_edge_list, parse_ordering, read_graph
from lowdeg.successor import tree_to_kwalk, verify_successor, walk_to_successor

log = logging.getLogger("lowdeg")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def resolve_ordering(source: str, G: Graph) -> Ordering:
    """``natural``, ``degeneracy``, ``random:SEED`` or ``file:PATH``."""
    kind, _, arg = source.partition(":")
    if kind == "natural":
        return Ordering.natural(G.n)
    if kind == "degeneracy":
        return degeneracy_ordering(G)
    if kind == "random":
        try:
            return Ordering.random(G.n, int(arg or 0))
        except ValueError:
            raise InputError(f"bad random seed {arg!r}") from None
    if kind == "file":
        try:
            return parse_ordering(Path(arg).read_text(), G.n)
        except OSError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"unknown ordering source {source!r}")


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_gen(args) -> int:
    params = {}
    for tok in args.params:
        key, sep, val = tok.partition("=")
        if not sep:
            raise InputError(f"parameter {tok!r} is not key=value")
        try:
            params[key] = int(val)
        except ValueError:
            raise InputError(f"parameter {key} must be an integer") from None
    try:
        G = GeneratorSpec(args.family, params, args.seed).build()
    except (ValueError, RuntimeError) as exc:
        raise InputError(str(exc)) from None
    _emit(format_edge_list(G.n, G.edges()), args.out)
    return EXIT_OK


def cmd_augment(args) -> int:
    G = _load(args.graph)
    if G.n == 0:
        raise InputError("graph has no vertices")
    L = resolve_ordering(args.ordering, G)
    A = augment(G, L)
    rep = verify_augmentation(G, L, A)
    if args.out:
        Path(args.out).write_text(format_edge_list(G.n, A.F))
    record = A.to_dict()
    record["bound_report"] = rep.to_dict()
    _emit(_dump(record), args.report)
    return EXIT_OK if rep.ok else EXIT_FAIL


def run_verify(G: Graph, L: Ordering, r: int, budget: int | None, tree_edges=None) -> dict:
    """Full verification record for one instance; ``violations`` empty iff all checks pass."""
    violations: list[str] = []
    out: dict = {"n": G.n, "m": G.m, "r": r}
    if tree_edges is None:
        A = augment(G, L)
        rep = verify_augmentation(G, L, A, r=r, budget=budget)
        out["augmentation"] = rep.to_dict()
        violations += rep.violations
        F = A.F
    else:
        F = [tuple(sorted(e)) for e in tree_edges]
        checks, msgs = structural_violations(G, F)
        violations += msgs
        H = G.plus_edges(F)
        c = col(G, L, 2 * r).value
        bound = 3 * c if is_connected(G) else 2 + 3 * c
        adm, exact, _ = admissibility(H, L, r, budget)
        out["augmentation"] = {"checks": checks, "col_2r": c, "adm_r": adm, "adm_exact": exact, "bound": bound}
        if adm > bound:
            violations.append(f"adm {adm} exceeds bound {bound}")
    el = {}
    for ids, S in elimination_forest(G, L):
        H, _ = G.induced(ids)
        sub = Ordering.from_positions(sorted(range(H.n), key=lambda i: L.rank[ids[i]]))
        rep = check_eltree_properties(H, sub, S)
        for kind, msgs in rep.violations.items():
            if msgs:
                el.setdefault(kind, []).extend(f"component of {ids[0]}: {m}" for m in msgs)
    out["elimination"] = {"ok": not el, "violations": el}
    violations += [m for msgs in el.values() for m in msgs]
    try:
        W = tree_to_kwalk(Graph.from_edges(G.n, F))
        S = walk_to_successor(W)
        succ_ok = verify_successor(S, G.n) and W.max_visits() <= 3
        out["successor"] = {"ok": succ_ok, "walk_length": len(W), "max_visits": W.max_visits()}
        if not succ_ok:
            violations.append("successor relation failed verification")
    except ValueError as exc:
        out["successor"] = {"ok": False, "error": str(exc)}
        violations.append(f"successor pipeline: {exc}")
    out["violations"] = violations
    out["ok"] = not violations
    return out


def cmd_verify(args) -> int:
    G = _load(args.graph)
    if G.n == 0:
        raise InputError("graph has no vertices")
    L = resolve_ordering(args.ordering, G)
    tree = None
    if args.tree:
        try:
            tree = read_graph(args.tree).edges()
        except OSError as exc:
            raise InputError(str(exc)) from None
    record = run_verify(G, L, args.r, args.budget, tree)
    _emit(_dump(record), args.out)
    return EXIT_OK if record["ok"] else EXIT_FAIL


def cmd_succ(args) -> int:
    G = _load(args.graph)
    if G.n == 0:
        raise InputError("graph has no vertices")
    L = resolve_ordering(args.ordering, G)
    A = augment(G, L)
    S = walk_to_successor(tree_to_kwalk(A.tree_graph()))
    if not verify_successor(S, G.n):
        log.error("successor relation failed verification")
        return EXIT_FAIL
    _emit(S.to_text(), args.out)
    return EXIT_OK


def bench_instance(family: str, size: int, seed: int) -> Graph:
    if family in ("grid", "torus"):
        return GeneratorSpec(family, {"rows": size, "cols": size}).build()
    if family == "random_gnm":
        return GeneratorSpec(family, {"n": size, "m": 2 * size}, seed).build()
    return GeneratorSpec(family, {"n": size}, seed).build()


def time_pipeline(G: Graph, L: Ordering) -> float:
    """Seconds for backbone scan + degree-3 tree construction."""
    t0 = time.perf_counter()
    B = backbone_scan(G, L)
    parent, children, roots = _orient(G.n, B, L)
    build_degree3_tree(BackboneTree(G, B, roots, parent, children), L)
    return time.perf_counter() - t0


def bench_rows(family: str, sizes: list[int], reps: int, seed: int, ordering: str = "natural") -> list[dict]:
    rows = []
    for size in sizes:
        G = bench_instance(family, size, seed)
        L = resolve_ordering(ordering, G)
        times = [time_pipeline(G, L) for _ in range(reps)]
        rows.append({
            "family": family, "size": size, "n": G.n, "m": G.m, "reps": reps,
            "median_s": statistics.median(times), "min_s": min(times), "max_s": max(times),
            "stdev_s": statistics.stdev(times) if reps > 1 else 0.0,
        })
    return rows


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise InputError(f"bad --sizes {args.sizes!r}") from None
    try:
        rows = bench_rows(args.family, sizes, args.reps, args.seed, args.ordering)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(_dump(rows) if args.format == "json" else _csv(rows), args.out)
    return EXIT_OK


@dataclass
class ExperimentRecord:
    generator: str
    seed: int
    n: int
    m: int
    components: int
    ordering: str
    r: int
    col_2r: int
    adm_r: int
    adm_exact: bool
    bound: int
    margin: int
    ok: bool
    violations: list[str] = field(default_factory=list)
    seconds: dict[str, float] = field(default_factory=dict)

    def row(self) -> dict:
        d = asdict(self)
        d["violations"] = "; ".join(self.violations)
        d["seconds"] = json.dumps(self.seconds)
        return d


def run_instance(generator: str, seed: int, G: Graph, ordering: str, r: int,
                 budget: int | None) -> ExperimentRecord:
    times = {}
    t0 = time.perf_counter()
    L = resolve_ordering(ordering, G)
    times["ordering"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    A = augment(G, L)
    times["augment"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    rep = verify_augmentation(G, L, A, r=r, budget=budget)
    times["verify"] = time.perf_counter() - t0
    violations = list(rep.violations)
    W = tree_to_kwalk(A.tree_graph())
    if not verify_successor(walk_to_successor(W), G.n) or W.max_visits() > 3:
        violations.append("successor pipeline failed")
    return ExperimentRecord(
        generator, seed, G.n, G.m, len(A.components), ordering, r, rep.col_2r, rep.adm,
        rep.adm_exact, rep.bound, rep.margin, not violations, violations, times,
    )


def _suite_task(task) -> ExperimentRecord:
    seed, n_max, comps, ordering, r, budget = task
    rng = random.Random(seed)
    k = rng.randint(comps[0], comps[1])
    n = rng.randint(max(k, 1), max(n_max, k))
    if k == 1:
        G = random_connected(n, rng.randrange(2 * n), rng.randrange(2**32))
        gen = "random_connected"
    else:
        cuts = sorted(rng.sample(range(1, n), k - 1))
        sizes = [b - a for a, b in zip([0, *cuts], [*cuts, n])]
        G = random_components(sizes, n, rng.randrange(2**32))
        gen = "random_components"
    if ordering == "random":
        ordering = f"random:{rng.randrange(2**32)}"
    return run_instance(gen, seed, G, ordering, r, budget)


def cmd_suite(args) -> int:
    try:
        radii = [int(x) for x in args.r.split(",")]
        lo, _, hi = args.components.partition("-")
        comps = (int(lo), int(hi or lo))
    except ValueError:
        raise InputError("bad --r or --components") from None
    master = random.Random(args.seed)
    tasks = [(master.randrange(2**32), args.n_max, comps, args.ordering, r, args.budget)
             for _ in range(args.count) for r in radii]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(_suite_task, tasks, chunksize=16))
    else:
        records = [_suite_task(t) for t in tasks]
    rows = [rec.row() for rec in records]
    _emit(_dump([asdict(r) for r in records]) if args.format == "json" else _csv(rows), args.out)
    bad = sum(not rec.ok for rec in records)
    log.info("%d instances, %d violations", len(records), bad)
    return EXIT_OK if bad == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lowdeg", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help, out_help="output file (default: stdout)"):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="edge-list or DIMACS file")
        sp.add_argument("--ordering", default="degeneracy",
                        help="natural | degeneracy | random:SEED | file:PATH (default: degeneracy)")
        sp.add_argument("--out", help=out_help)
        sp.set_defaults(func=fn)
        return sp

    g = sub.add_parser("gen", help="generate a graph as an edge list")
    g.add_argument("family")
    g.add_argument("params", nargs="*", help="key=value parameters, e.g. rows=3 cols=3")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    a = graph_cmd("augment", cmd_augment, "build the degree-3 tree T", "write T as an edge list here")
    a.add_argument("--report", help="JSON report path (default: stdout)")

    v = graph_cmd("verify", cmd_verify, "check structure, admissibility bound and successor law")
    v.add_argument("--r", type=int, default=1)
    v.add_argument("--budget", type=int, default=None,
                   help="node budget for exact admissibility (default: exact only for n <= 12)")
    v.add_argument("--tree", help="verify this tree instead of constructing one")
    v.add_argument("--format", choices=["json"], default="json")

    graph_cmd("succ", cmd_succ, "write the successor order, one vertex per line")

    b = sub.add_parser("bench", help="time the tree construction across sizes")
    b.add_argument("--family", default="grid")
    b.add_argument("--sizes", default="100,200,400")
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--ordering", default="natural")
    b.add_argument("--format", choices=["csv", "json"], default="csv")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("suite", help="randomised bound-checking batch")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--r", default="1,2", help="comma-separated radii")
    s.add_argument("--components", default="1", help="component count or range, e.g. 2-4")
    s.add_argument("--ordering", default="random", help="random (fresh per instance) or a fixed source")
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
