import csv
import io
import json

import pytest

from lowdeg.cli import main
from lowdeg.io import format_edge_list, parse_edge_list


@pytest.fixture
def fig1(tmp_path):
    p = tmp_path / "fig1.txt"
    assert main(["gen", "figure1", "--out", str(p)]) == 0
    return p


def test_gen(tmp_path, capsys):
    assert main(["gen", "grid", "rows=3", "cols=3"]) == 0
    G = parse_edge_list(capsys.readouterr().out)
    assert (G.n, G.m) == (9, 12)
    a, b = tmp_path / "a", tmp_path / "b"
    main(["gen", "random_gnm", "n=100", "m=200", "--seed", "7", "--out", str(a)])
    main(["gen", "random_gnm", "n=100", "m=200", "--seed", "7", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
    assert main(["gen", "grid", "rows=3"]) == 2
    assert main(["gen", "bogus"]) == 2


def test_gen_figure1(fig1):
    G = parse_edge_list(fig1.read_text())
    assert (G.n, G.m) == (23, 24) and G.has_edge(0, 21)


def test_augment_figure1(fig1, tmp_path):
    tree, report = tmp_path / "t.txt", tmp_path / "r.json"
    assert main(["augment", str(fig1), "--ordering", "natural", "--out", str(tree), "--report", str(report)]) == 0
    T = parse_edge_list(tree.read_text())
    assert T.m == 22 and max(T.degree(v) for v in range(T.n)) == 3
    rec = json.loads(report.read_text())
    assert rec["component_count"] == 1 and len(rec["F"]) == 22
    assert {"edge": [20, 22], "origin": 15} in rec["F_new"]
    assert rec["bound_report"]["ok"]


def test_augment_star_centre_first(tmp_path):
    g = tmp_path / "star.txt"
    g.write_text("4 3\n0 1\n0 2\n0 3\n")
    tree = tmp_path / "t.txt"
    assert main(["augment", str(g), "--ordering", "natural", "--out", str(tree), "--report", str(tmp_path / "r")]) == 0
    assert parse_edge_list(tree.read_text()).edges() == [(0, 1), (1, 2), (2, 3)]


def test_augment_input_errors(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["augment", str(empty)]) == 2
    assert main(["augment", str(tmp_path / "missing.txt")]) == 2
    zero = tmp_path / "zero.txt"
    zero.write_text("0 0\n")
    assert main(["augment", str(zero)]) == 2


def test_ordering_sources(fig1, tmp_path, capsys):
    order = tmp_path / "L.txt"
    order.write_text("".join(f"{v}\n" for v in reversed(range(23))))
    for src in ["natural", "degeneracy", "random:4", f"file:{order}"]:
        assert main(["augment", str(fig1), "--ordering", src]) == 0
    assert main(["augment", str(fig1), "--ordering", "bogus"]) == 2
    assert main(["augment", str(fig1), "--ordering", f"file:{tmp_path / 'nope'}"]) == 2


def test_verify_figure1(fig1, capsys):
    assert main(["verify", str(fig1), "--ordering", "natural", "--r", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["ok"] and rec["violations"] == []
    assert rec["elimination"]["ok"] and rec["successor"]["ok"]


def test_verify_exit_code_matches_violations(fig1, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    # 0-1, 1-2, 1-3, 1-4 then a path: vertex 1 gets degree 4
    edges = [(0, 1), (1, 2), (1, 3), (1, 4)] + [(v, v + 1) for v in range(4, 22)]
    bad.write_text(format_edge_list(23, edges))
    code = main(["verify", str(fig1), "--ordering", "natural", "--tree", str(bad)])
    rec = json.loads(capsys.readouterr().out)
    assert code == 1 and rec["violations"]
    assert not rec["augmentation"]["checks"]["max_degree_3"]


def test_verify_disconnected(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text("7 4\n0 1\n1 2\n3 4\n5 6\n")
    assert main(["verify", str(g), "--r", "2"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["augmentation"]["bound_report"]["connected"] is False


def test_succ(fig1, tmp_path):
    out = tmp_path / "succ.txt"
    assert main(["succ", str(fig1), "--ordering", "natural", "--out", str(out)]) == 0
    order = [int(x) for x in out.read_text().split()]
    assert sorted(order) == list(range(23))


def test_succ_path_and_disconnected(tmp_path, capsys):
    g = tmp_path / "p.txt"
    g.write_text("4 3\n0 1\n1 2\n2 3\n")
    assert main(["succ", str(g), "--ordering", "natural"]) == 0
    assert capsys.readouterr().out.split() == ["0", "1", "2", "3"]
    g.write_text("5 2\n0 1\n2 3\n")
    assert main(["succ", str(g)]) == 0
    assert sorted(map(int, capsys.readouterr().out.split())) == list(range(5))


def test_bench_csv(capsys):
    assert main(["bench", "--family", "grid", "--sizes", "3,10", "--reps", "3"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [int(r["n"]) for r in rows] == [9, 100]
    assert float(rows[0]["median_s"]) < 0.01
    assert all(float(r["stdev_s"]) >= 0 for r in rows)


def test_suite(capsys):
    assert main(["suite", "--count", "30", "--components", "2-4", "--seed", "1"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert len(recs) == 60
    assert all(r["ok"] and r["adm_exact"] and r["margin"] >= 0 for r in recs)
    assert all(2 <= r["components"] <= 4 for r in recs)
    assert main(["suite", "--count", "5", "--r", "x"]) == 2


def test_suite_deterministic(capsys):
    main(["suite", "--count", "10", "--seed", "3", "--format", "csv"])
    a = [r[:12] for r in csv.reader(io.StringIO(capsys.readouterr().out))]
    main(["suite", "--count", "10", "--seed", "3", "--format", "csv"])
    b = [r[:12] for r in csv.reader(io.StringIO(capsys.readouterr().out))]
    assert a == b
