import pytest

from lowdeg.generators import GeneratorSpec, figure1, grid, random_gnm, random_regular, torus
from lowdeg.graph import connected_components
from lowdeg.io import format_edge_list


def test_grid_counts():
    G = grid(3, 3)
    assert (G.n, G.m) == (9, 12)


def test_figure1():
    G = figure1()
    assert (G.n, G.m) == (23, 24) and G.has_edge(0, 21)
    assert len(connected_components(G)) == 1


def test_gnm_deterministic():
    a = random_gnm(100, 200, 7)
    b = random_gnm(100, 200, 7)
    assert format_edge_list(a.n, a.edges()) == format_edge_list(b.n, b.edges())
    assert a.m == 200
    assert random_gnm(100, 200, 8) != a


def test_regular_and_torus():
    G = random_regular(20, 3, 1)
    assert all(G.degree(v) == 3 for v in range(20))
    T = torus(4, 5)
    assert all(T.degree(v) == 4 for v in range(20))


def test_spec_build_and_errors():
    assert GeneratorSpec("grid", {"rows": 2, "cols": 3}).build().m == 7
    assert GeneratorSpec("random_gnm", {"n": 10, "m": 5}, seed=3).build() == random_gnm(10, 5, 3)
    with pytest.raises(ValueError):
        GeneratorSpec("nope").build()
    with pytest.raises(ValueError):
        GeneratorSpec("grid", {"rows": 2}).build()
    with pytest.raises(ValueError):
        random_gnm(4, 7, 0)
