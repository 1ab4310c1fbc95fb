"""Strong chordality: simple vertices, suns, unit interval graphs."""

import random

import pytest

from matlabel import (
    Graph,
    build_poset,
    detect_induced_sun,
    find_any_crown,
    find_induced_subgraph,
    find_simple_elimination_ordering,
    is_chordal,
    is_simple_vertex,
    is_strongly_chordal,
    is_unit_interval,
    unit_interval_obstruction,
)
from matlabel.families import (
    claw,
    complete_graph,
    cycle_graph,
    n_sun,
    net,
    path_graph,
    random_graph,
    random_strongly_chordal,
    rising_sun,
)
from matlabel.oracle import enumerate_graphs
from matlabel.strong_chordal import claw as claw_pattern


def test_sun_has_no_simple_vertex():
    s = n_sun(3)
    assert not any(is_simple_vertex(s, v) for v in s.vertices)


def test_complete_graph_all_simple():
    k = complete_graph(4)
    assert all(is_simple_vertex(k, v) for v in k.vertices)
    assert find_simple_elimination_ordering(k) is not None


def test_simple_elimination_of_sun_fails():
    assert find_simple_elimination_ordering(n_sun(3)) is None
    assert find_simple_elimination_ordering(n_sun(4)) is None


def test_simple_elimination_ordering_is_valid(ui7):
    order = find_simple_elimination_ordering(ui7)
    assert order is not None
    for i in range(len(order), 0, -1):
        prefix = ui7.induced_subgraph(order[:i])
        assert is_simple_vertex(prefix, order[i - 1])


def test_detect_sun_identity_on_sun():
    witness = detect_induced_sun(n_sun(3))
    assert witness is not None
    assert witness.n == 3
    assert witness.inner == (1, 2, 3) and witness.outer == (4, 5, 6)


def test_detect_sun_on_example_none(ui7):
    assert detect_induced_sun(ui7) is None


def test_detect_sun_four():
    witness = detect_induced_sun(n_sun(4))
    assert witness is not None and witness.n == 4
    # the 4-sun contains no induced 3-sun, so the smallest n really is 4
    assert detect_induced_sun(n_sun(4), 3) is None


def test_detect_sun_nmax_validation():
    with pytest.raises(ValueError):
        detect_induced_sun(n_sun(3), 2)


def test_detect_sun_lexicographically_least_witness():
    # two vertex-disjoint 3-suns; the witness must use the lower ids
    a = n_sun(3)
    b = n_sun(3)
    shifted = Graph(
        [v + 100 for v in b.vertices],
        [(u + 100, v + 100) for u, v in b.edges],
    )
    g = Graph(list(a.vertices) + list(shifted.vertices),
              list(a.edges) + list(shifted.edges))
    w = detect_induced_sun(g)
    assert w.inner == (1, 2, 3) and w.outer == (4, 5, 6)


def test_sun_witness_is_checkable():
    g = n_sun(4).add_vertex(100, [1, 2, 3, 4])  # bury the sun a little
    w = detect_induced_sun(g)
    assert w is not None
    inner, outer = w.inner, w.outer
    assert g.is_clique(inner)
    for i, v in enumerate(outer):
        expected = {inner[i], inner[(i + 1) % w.n]}
        assert g.neighborhood(v) & set(inner) == expected
    sub = g.induced_subgraph(set(inner) | set(outer))
    assert sub.m == len(inner) * (len(inner) - 1) // 2 + 2 * w.n


def test_is_strongly_chordal_basics():
    assert is_strongly_chordal(claw())
    assert not is_strongly_chordal(n_sun(3))
    assert is_strongly_chordal(rising_sun())
    assert not is_strongly_chordal(rising_sun().contract_edge((1, 2)))


def test_strongly_chordal_hereditary():
    rng = random.Random(5)
    for _ in range(30):
        g = random_strongly_chordal(rng.randint(2, 12), rng=rng)
        subset = [v for v in g.vertices if rng.random() < 0.6]
        assert is_strongly_chordal(g.induced_subgraph(subset))


def test_unit_interval():
    assert not is_unit_interval(claw())
    assert not is_unit_interval(net())
    assert not is_unit_interval(n_sun(3))
    assert not is_unit_interval(cycle_graph(5))
    assert is_unit_interval(path_graph(5))
    assert is_unit_interval(complete_graph(6))


def test_example_is_unit_interval(ui7):
    assert is_unit_interval(ui7)
    assert unit_interval_obstruction(ui7) is None


def test_rising_sun_not_unit_interval():
    kind, payload = unit_interval_obstruction(rising_sun())
    assert kind in ("claw", "net")
    assert not is_unit_interval(rising_sun())


def test_unit_interval_implies_strongly_chordal_sampled():
    rng = random.Random(6)
    for _ in range(400):
        n = rng.randint(1, 6)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        ui = is_unit_interval(g)
        sc = is_strongly_chordal(g)
        if ui:
            assert sc
        if sc:
            assert is_chordal(g)


def test_find_induced_subgraph():
    assert find_induced_subgraph(rising_sun(), claw_pattern()) is not None
    assert find_induced_subgraph(complete_graph(5), claw_pattern()) is None
    hit = find_induced_subgraph(n_sun(3), net())
    # the 3-sun has no induced net: the outer vertices pend off edges
    assert hit is None


def _threeway(g):
    sc = is_strongly_chordal(g)
    via_sun = is_chordal(g) and detect_induced_sun(g) is None
    via_crown = is_chordal(g) and find_any_crown(build_poset(g)) is None
    return sc, via_sun, via_crown


def test_threeway_agreement_exhaustive_small():
    for n in range(7):
        for g in enumerate_graphs(n):
            sc, via_sun, via_crown = _threeway(g)
            assert sc == via_sun == via_crown, g


def test_threeway_agreement_random_sample():
    rng = random.Random(2718)
    for _ in range(10_000):
        n = rng.randint(7, 8)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        sc, via_sun, via_crown = _threeway(g)
        assert sc == via_sun == via_crown, g
