"""Chordality recognition, perfect elimination orderings and separators.

An ordering (v_1, ..., v_l) is a perfect elimination ordering (PEO) when
each v_i is simplicial in the subgraph induced by {v_1, ..., v_i}; a graph
is chordal exactly when such an ordering exists.
"""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v is a clique."""
    return g.is_clique(g.neighborhood(v))


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """Check the PEO condition on every prefix of `order`.

    Raises ValueError if `order` is not a permutation of the vertices.
    """
    seq = list(order)
    if sorted(seq) != list(g.vertices):
        raise ValueError("ordering is not a permutation of the vertex set")
    position = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        earlier = [u for u in g.neighborhood(v) if position[u] < i]
        if not g.is_clique(earlier):
            return False
    return True


def find_peo(g: Graph) -> list[int] | None:
    """Deterministic PEO via maximum cardinality search, or None.

    Vertices are visited greedily by number of already visited neighbors,
    ties broken by smallest id. For a chordal graph the visit order itself
    satisfies the prefix PEO condition; the candidate is validated and
    None is returned when validation fails (non-chordal input).
    """
    weight = {v: 0 for v in g.vertices}
    order: list[int] = []
    unvisited = set(g.vertices)
    while unvisited:
        z = max(sorted(unvisited), key=lambda v: weight[v])
        unvisited.remove(z)
        order.append(z)
        for y in g.neighborhood(z):
            if y in unvisited:
                weight[y] += 1
    return order if is_peo(g, order) else None


def is_chordal(g: Graph) -> bool:
    return find_peo(g) is not None


def random_peo(g: Graph, rng: random.Random) -> list[int] | None:
    """A uniformly haphazard valid PEO, built by random simplicial removal."""
    current = g
    removal: list[int] = []
    while current.n:
        choices = [v for v in current.vertices if is_simplicial(current, v)]
        if not choices:
            return None
        v = rng.choice(choices)
        removal.append(v)
        current = current.delete_vertex(v)
    return removal[::-1]


def peo_exponents(g: Graph) -> tuple[int, ...] | None:
    """Earlier-neighbor counts along a PEO, sorted ascending; None if not chordal.

    For a chordal graph this multiset does not depend on the PEO chosen and
    equals the negated roots of the chromatic polynomial.
    """
    order = find_peo(g)
    if order is None:
        return None
    return exponents_along(g, order)


def exponents_along(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    position = {v: i for i, v in enumerate(order)}
    counts = [
        sum(1 for u in g.neighborhood(v) if position[u] < i)
        for i, v in enumerate(order)
    ]
    return tuple(sorted(counts))


def minimal_separator_decomposition(
    g: Graph, a: int, b: int
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """A minimal (a, b)-separator S with the two sides (S, A, B).

    A is the component of a in g - S and B the rest. Requires a and b
    nonadjacent and in the same component. S is obtained as the neighbors
    of the component of a in g - N(b); every such vertex touches A and is
    adjacent to b, which makes S minimal. For chordal g, S is a clique.
    """
    g._require_vertex(a)
    g._require_vertex(b)
    if a == b or g.has_edge(a, b):
        raise ValueError("endpoints must be distinct and nonadjacent")
    if b not in g.component_of(a):
        raise ValueError("endpoints must lie in the same connected component")
    comp_a = g.component_of(a, forbidden=g.neighborhood(b))
    separator = frozenset(
        s for s in g.vertex_set - comp_a if g.neighborhood(s) & comp_a
    )
    rest = g.vertex_set - comp_a - separator
    return separator, comp_a, rest


def find_chordless_cycle(g: Graph, min_len: int = 4) -> tuple[int, ...] | None:
    """An induced cycle of length >= min_len, or None.

    Searches, for each vertex v and nonadjacent pair x, y in N(v), a
    shortest x-y path avoiding N[v] - {x, y}; such a path closes with v to
    a chordless cycle. Any chordless cycle is found this way, so a None
    result certifies chordality.
    """
    for v in g.vertices:
        nbrs = sorted(g.neighborhood(v))
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                forbidden = (g.closed_neighborhood(v) - {x, y}) | {v}
                path = _shortest_path(g, x, y, forbidden)
                if path is not None and len(path) >= min_len - 1:
                    return (v,) + path
    return None


def _shortest_path(g, src, dst, forbidden):
    if src in forbidden or dst in forbidden:
        return None
    prev = {src: None}
    queue = [src]
    while queue:
        nxt = []
        for x in queue:
            for y in sorted(g.neighborhood(x)):
                if y in prev or y in forbidden:
                    continue
                prev[y] = x
                if y == dst:
                    path = [y]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                nxt.append(y)
        queue = nxt
    return None
