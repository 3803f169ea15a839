import itertools
import random

import pytest
from hypothesis import given, settings

from lowdeg.colouring import (
    AdmissibilityBudgetExceeded,
    PathFamily,
    adm_exact,
    adm_graph,
    adm_greedy_lower,
    best_ordering_bruteforce,
    col,
    degeneracy_ordering,
    sreach,
    valid_paths,
)
from lowdeg.generators import clique, cycle, grid, path, random_connected, star
from lowdeg.graph import Graph, Ordering

from conftest import graph_and_ordering
from oracles import adm_oracle, all_admissibility_paths, col_oracle, sreach_oracle

nat = Ordering.natural
CENTRE_LAST = Ordering.from_positions([1, 2, 3, 0])


def test_sreach_examples():
    assert sreach(path(3), nat(3), 2, 2) == {1, 2}
    assert sreach(star(4), nat(4), 3, 2) == {0, 3}
    G = random_connected(9, 10, 4)
    assert all(sreach(G, nat(9), v, 0) == {v} for v in range(9))
    with pytest.raises(ValueError):
        sreach(G, nat(9), 0, -1)


def test_col_examples():
    assert col(Graph.from_edges(5, []), Ordering.random(5, 1), 3).value == 1
    prof = col(clique(4), nat(4), 1)
    assert prof.value == 4 and prof.argmax == 3
    assert col(path(3), nat(3), 2).value == 2


def test_col_argmax_lowest_id():
    prof = col(path(4), nat(4), 1)
    assert prof.sizes == (1, 2, 2, 2)
    assert prof.argmax == 1


def test_adm_examples():
    val, fam = adm_exact(star(4), CENTRE_LAST, 0, 1)
    assert val == 3
    assert set(fam.paths) == {(0, 1), (0, 2), (0, 3)}
    assert adm_exact(clique(4), nat(4), 3, 1)[0] == 3
    G = random_connected(8, 6, 2)
    L = Ordering.random(8, 2)
    assert adm_exact(G, L, L.position[0], 2) == (0, PathFamily(L.position[0], 2))


def test_adm_graph_examples():
    assert adm_graph(path(3), nat(3), 1) == 1
    assert adm_graph(clique(4), nat(4), 1) == 3
    assert adm_graph(Graph.from_edges(4, []), nat(4), 2) == 0


def test_adm_budget_is_explicit():
    # this instance needs 15 search nodes
    G, L = random_connected(12, 20, 1), Ordering.random(12, 1)
    with pytest.raises(AdmissibilityBudgetExceeded) as err:
        adm_exact(G, L, 6, 3, budget=5)
    assert err.value.lower_bound <= adm_exact(G, L, 6, 3, budget=15)[0]


def test_greedy_examples():
    assert adm_greedy_lower(star(4), CENTRE_LAST, 0, 1)[0] == 3
    L = Ordering.random(10, 5)
    G = random_connected(10, 8, 5)
    assert adm_greedy_lower(G, L, L.position[0], 3)[0] == 0


def test_greedy_below_exact_random_batch():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(1, 12)
        G = random_connected(n, rng.randrange(2 * n + 1), rng.randrange(10**9))
        L = Ordering.random(n, rng.randrange(10**9))
        r = rng.choice([1, 2, 3])
        for v in range(n):
            g, fam = adm_greedy_lower(G, L, v, r)
            e, cert = adm_exact(G, L, v, r)
            assert g <= e
            assert fam.is_valid(G, L) and cert.is_valid(G, L)


def test_degeneracy_examples():
    assert col(path(3), degeneracy_ordering(path(3)), 1).value == 2
    for perm in itertools.permutations(range(4)):
        assert col(clique(4), Ordering.from_positions(perm), 1).value == 4
    g = grid(2, 3)
    assert col(g, degeneracy_ordering(g), 1).value == 3


@pytest.mark.parametrize("G", [path(3), grid(2, 3), cycle(5), star(5), random_connected(6, 4, 9)])
def test_degeneracy_is_col1_optimal(G):
    _, best = best_ordering_bruteforce(G, 1, measure="col")
    assert col(G, degeneracy_ordering(G), 1).value == best


def test_degeneracy_tie_break():
    # all degrees equal on a cycle: vertex 0 is removed first and goes last
    assert degeneracy_ordering(cycle(5)).position[-1] == 0


def test_bruteforce_examples():
    assert best_ordering_bruteforce(clique(3), 1)[1] == 2
    assert best_ordering_bruteforce(path(2), 1)[1] == 1
    L, val = best_ordering_bruteforce(cycle(5), 2)
    assert val == 2 and adm_graph(cycle(5), L, 2) == 2
    with pytest.raises(ValueError):
        best_ordering_bruteforce(path(10), 1)


def test_path_family_validation():
    G = path(3)
    L = Ordering.from_positions([1, 2, 0])
    assert PathFamily(0, 1, ((0, 1),)).is_valid(G, Ordering.from_positions([1, 0, 2]))
    bad = PathFamily(2, 2, ((2, 1, 0),))
    assert not bad.is_valid(G, nat(3))
    assert not PathFamily(0, 1, ((0, 1), (0, 1))).is_valid(G, L)


@given(graph_and_ordering(max_n=8))
def test_sreach_matches_path_enumeration(case):
    G, L = case
    for r in (1, 2, 3):
        for v in range(G.n):
            assert sreach(G, L, v, r) == sreach_oracle(G, L, v, r)


@given(graph_and_ordering(max_n=7))
@settings(max_examples=40)
def test_valid_paths_match_oracle(case):
    G, L = case
    for v in range(G.n):
        assert sorted(valid_paths(G, L, v, 3)) == sorted(all_admissibility_paths(G, L, v, 3))


@given(graph_and_ordering(max_n=7))
@settings(max_examples=40)
def test_adm_exact_matches_set_packing_oracle(case):
    G, L = case
    for r in (1, 2):
        for v in range(G.n):
            val, fam = adm_exact(G, L, v, r)
            assert val == adm_oracle(G, L, v, r) == len(fam)
            assert fam.is_valid(G, L)


@given(graph_and_ordering(max_n=9))
def test_admissibility_below_reachability(case):
    G, L = case
    for r in (1, 2, 3):
        sizes = col(G, L, r).sizes
        vals = [adm_exact(G, L, v, r)[0] for v in range(G.n)]
        assert all(a <= s - 1 for a, s in zip(vals, sizes))
        assert max(vals) <= max(sizes)


@given(graph_and_ordering(max_n=8))
def test_monotone_in_radius(case):
    G, L = case
    prev_col = prev_adm = 0
    for r in range(0, 4):
        for v in range(G.n):
            assert sreach(G, L, v, r) <= sreach(G, L, v, r + 1)
        c, a = col(G, L, r).value, adm_graph(G, L, r)
        assert c >= prev_col and a >= prev_adm
        prev_col, prev_adm = c, a


@given(graph_and_ordering(max_n=8))
def test_monotone_under_edge_removal(case):
    G, L = case
    for e in G.edges()[:4]:
        H = G.minus_edge(*e)
        for r in (1, 2):
            assert col(H, L, r).value <= col(G, L, r).value
            assert adm_graph(H, L, r) <= adm_graph(G, L, r)


def test_col_matches_oracle_small():
    G = random_connected(8, 7, 1)
    for seed in range(5):
        L = Ordering.random(8, seed)
        for r in (1, 2, 4):
            assert col(G, L, r).value == col_oracle(G, L, r)
