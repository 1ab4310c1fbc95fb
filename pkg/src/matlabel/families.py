"""Standard graph constructions and seeded random generators."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph
from .strong_chordal import claw, is_simple_vertex, is_strongly_chordal, net

__all__ = [
    "claw", "complete_graph", "cycle_graph", "n_sun", "net", "path_graph",
    "random_graph", "random_strongly_chordal", "rising_sun",
    "RISING_SUN_MARKED_EDGE",
]


def complete_graph(ell: int, vertices=None) -> Graph:
    vs = sorted(vertices) if vertices is not None else list(range(1, ell + 1))
    if len(vs) != ell:
        raise ValueError(f"expected {ell} vertices, got {len(vs)}")
    return Graph(vs, combinations(vs, 2))


def path_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def n_sun(n: int) -> Graph:
    """Central clique 1..n plus outer vertex n+i adjacent to i and i+1 (cyclic)."""
    if n < 3:
        raise ValueError("suns are defined for n >= 3")
    edges = list(combinations(range(1, n + 1), 2))
    for i in range(1, n + 1):
        edges.append((i, n + i))
        edges.append((i % n + 1, n + i))
    return Graph(range(1, 2 * n + 1), edges)


def rising_sun() -> Graph:
    """A 3-sun with one outer vertex replaced by an inner clique edge.

    Vertices 1..4 form a clique; 5, 6, 7 are outer vertices adjacent to
    {2, 3}, {3, 4}, {4, 1}. Contracting the marked edge (1, 2) produces the
    3-sun, so this graph is strongly chordal while one contraction is not.
    """
    edges = list(combinations(range(1, 5), 2))
    edges += [(2, 5), (3, 5), (3, 6), (4, 6), (4, 7), (1, 7)]
    return Graph(range(1, 8), edges)


RISING_SUN_MARKED_EDGE = (1, 2)


def random_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform graph with n vertices 1..n and m edges."""
    slots = list(combinations(range(1, n + 1), 2))
    if m > len(slots):
        raise ValueError(f"at most {len(slots)} edges on {n} vertices")
    return Graph(range(1, n + 1), rng.sample(slots, m))


def random_strongly_chordal(n: int, seed=None, rng: random.Random | None = None,
                            grow_bias: float = 0.6) -> Graph:
    """Random strongly chordal graph grown by inverse simple elimination.

    Each new vertex is attached to a clique chosen so the vertex is simple
    in the grown graph, which makes the reverse insertion order a simple
    elimination ordering; a pendant attachment always qualifies, so growth
    never stalls. The output is re-checked with the recognizer.
    """
    if rng is None:
        rng = random.Random(seed)
    g = Graph([1])
    for v in range(2, n + 1):
        placed = None
        for _ in range(30):
            anchor = rng.choice(g.vertices)
            clique = {anchor}
            pool = set(g.neighborhood(anchor))
            while pool and rng.random() < grow_bias:
                w = rng.choice(sorted(pool))
                clique.add(w)
                pool &= g.neighborhood(w)
            candidate = g.add_vertex(v, clique)
            if is_simple_vertex(candidate, v):
                placed = candidate
                break
        if placed is None:
            placed = g.add_vertex(v, [rng.choice(g.vertices)])
            assert is_simple_vertex(placed, v), "pendant vertices are always simple"
        g = placed
    assert is_strongly_chordal(g)
    return g
