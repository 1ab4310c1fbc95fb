"""Chordality recognition, PEOs, separators, exponents."""

import random
from itertools import permutations

import pytest

from matlabel import (
    find_chordless_cycle,
    find_peo,
    is_chordal,
    is_peo,
    is_simplicial,
    minimal_separator_decomposition,
    peo_exponents,
)
from matlabel.chordal import exponents_along, random_peo
from matlabel.families import (
    claw,
    complete_graph,
    cycle_graph,
    n_sun,
    path_graph,
    random_graph,
)
from matlabel.oracle import brute_induced_cycles, brute_minimal_separators


def test_is_simplicial():
    tree = path_graph(4)
    assert is_simplicial(tree, 1) and is_simplicial(tree, 4)
    assert not is_simplicial(claw(), 1)
    k = complete_graph(5)
    assert all(is_simplicial(k, v) for v in k.vertices)


def test_find_peo_on_cycles_and_cliques():
    assert find_peo(cycle_graph(4)) is None
    order = find_peo(complete_graph(4))
    assert order is not None and is_peo(complete_graph(4), order)


def test_find_peo_on_example(ui7):
    order = find_peo(ui7)
    assert order is not None
    assert is_peo(ui7, order)


def test_is_peo_complete_any_order():
    k = complete_graph(4)
    for perm in permutations(k.vertices):
        assert is_peo(k, perm)


def test_is_peo_c4_never():
    c = cycle_graph(4)
    for perm in permutations(c.vertices):
        assert not is_peo(c, perm)


def test_is_peo_path_prefix_convention():
    # vertex 2 is the middle of the path, so it cannot come last
    p = path_graph(3)
    assert is_peo(p, [1, 2, 3])
    assert is_peo(p, [2, 1, 3])
    assert not is_peo(p, [1, 3, 2])


def test_is_peo_rejects_non_permutations():
    with pytest.raises(ValueError):
        is_peo(path_graph(3), [1, 2])
    with pytest.raises(ValueError):
        is_peo(path_graph(3), [1, 2, 2])


def test_is_chordal():
    assert not is_chordal(cycle_graph(5))
    for n in (3, 4, 5):
        assert is_chordal(n_sun(n))
    assert is_chordal(complete_graph(1))


def test_chordality_matches_induced_cycle_oracle():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 6)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        assert is_chordal(g) == (brute_induced_cycles(g, 4) is None)


def test_find_chordless_cycle_witness():
    for g in (cycle_graph(4), cycle_graph(6), n_sun(3).delete_vertex(1)):
        cyc = find_chordless_cycle(g)
        if cyc is None:
            assert is_chordal(g)
            continue
        assert len(cyc) >= 4
        sub = g.induced_subgraph(cyc)
        assert sub.m == sub.n and all(sub.degree(v) == 2 for v in cyc)
    assert find_chordless_cycle(complete_graph(5)) is None
    assert find_chordless_cycle(n_sun(3)) is None


def test_minimal_separator_path():
    s, a, b = minimal_separator_decomposition(path_graph(3), 1, 3)
    assert (s, a, b) == ({2}, {1}, {3})


def test_minimal_separator_c4_not_clique():
    g = cycle_graph(4)
    s, a, b = minimal_separator_decomposition(g, 1, 3)
    assert s == {2, 4}
    assert not g.is_clique(s)


def test_minimal_separator_example_is_clique(ui7):
    s, a, b = minimal_separator_decomposition(ui7, 1, 6)
    assert s == {4, 5}
    assert ui7.is_clique(s)
    assert s in brute_minimal_separators(ui7)
    assert a | s | b == ui7.vertex_set and not (a & s or a & b or s & b)


def test_minimal_separator_errors():
    with pytest.raises(ValueError):
        minimal_separator_decomposition(path_graph(3), 1, 2)  # adjacent
    g = path_graph(2).add_vertex(9)
    with pytest.raises(ValueError):
        minimal_separator_decomposition(g, 1, 9)  # different components


def test_minimal_separators_agree_with_oracle():
    rng = random.Random(12)
    checked = 0
    while checked < 60:
        g = random_graph(6, rng.randint(5, 12), rng)
        pairs = [
            (a, b)
            for a in g.vertices for b in g.vertices
            if a < b and not g.has_edge(a, b) and b in g.component_of(a)
        ]
        if not pairs:
            continue
        checked += 1
        oracle = brute_minimal_separators(g)
        chordal = is_chordal(g)
        for a, b in pairs:
            s, side_a, side_b = minimal_separator_decomposition(g, a, b)
            assert s in oracle
            assert a in side_a and b in side_b
            if chordal:
                assert g.is_clique(s)


def test_peo_exponents_values(ui7):
    assert peo_exponents(complete_graph(4)) == (0, 1, 2, 3)
    assert peo_exponents(ui7) == (0, 1, 2, 2, 2, 3, 3)
    from matlabel import Graph

    assert peo_exponents(Graph(range(5))) == (0, 0, 0, 0, 0)
    assert peo_exponents(cycle_graph(4)) is None


def test_peo_exponents_independent_of_peo(ui7):
    rng = random.Random(8)
    reference = peo_exponents(ui7)
    for _ in range(5):
        order = random_peo(ui7, rng)
        assert order is not None and is_peo(ui7, order)
        assert exponents_along(ui7, order) == reference


def test_peo_exponents_sum_is_edge_count():
    rng = random.Random(15)
    for _ in range(100):
        g = random_graph(6, rng.randint(0, 12), rng)
        exps = peo_exponents(g)
        if exps is not None:
            assert sum(exps) == g.m
