"""Brute-force oracles for tests and acceptance checks.

Deliberately naive and implemented apart from the production recognizers:
these share only the graph primitives, so agreement between an oracle and
a production path is meaningful evidence. Every oracle carries a hard
input-size guard, overridable where it exists.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .graph import Graph, iter_subsets


def enumerate_graphs(
    n: int,
    predicate: Callable[[Graph], bool] | None = None,
    connected: bool = False,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """All graphs on n labeled vertices 0..n-1, optionally connected only.

    Streams 2^(n choose 2) graphs, filtered by `predicate` when given;
    guarded at n <= 8.
    """
    if n > 8 and not allow_large:
        raise ValueError(f"enumeration guarded at 8 vertices, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        g = Graph(range(n), edges)
        if connected and not g.is_connected():
            continue
        if predicate is None or predicate(g):
            yield g


def brute_induced_cycles(
    g: Graph, min_len: int = 4, max_vertices: int = 10
) -> tuple[int, ...] | None:
    """An induced cycle with at least min_len vertices, by subset scan.

    Checks every vertex subset for inducing a cycle (connected, all degrees
    two, as many edges as vertices). Guarded at `max_vertices`.
    """
    if g.n > max_vertices:
        raise ValueError(
            f"induced-cycle scan guarded at {max_vertices} vertices, got {g.n}"
        )
    if min_len < 3:
        raise ValueError("cycles have at least 3 vertices")
    for subset in iter_subsets(g.vertices):
        if len(subset) < min_len:
            continue
        sub = g.induced_subgraph(subset)
        if sub.m != sub.n or not sub.is_connected():
            continue
        if any(sub.degree(v) != 2 for v in sub.vertices):
            continue
        walk = [min(subset)]
        walk.append(min(sub.neighborhood(walk[0])))
        while len(walk) < sub.n:
            a, b = walk[-2], walk[-1]
            walk.append(next(x for x in sub.neighborhood(b) if x != a))
        return tuple(walk)
    return None


def crown_pattern(k: int) -> tuple[int, frozenset[tuple[int, int]]]:
    """The abstract k-crown as (element count, strict relations i < j).

    Elements 0..k-1 are the lower layer, k..2k-1 the upper one; lower i
    sits below upper i and upper (i+1) mod k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    less = set()
    for i in range(k):
        less.add((i, k + i))
        less.add((i, k + (i + 1) % k))
    return 2 * k, frozenset(less)


def brute_induced_subposet(
    poset, pattern, max_nodes: int = 64
) -> tuple[frozenset[int], ...] | None:
    """Injection realizing an abstract pattern as an induced subposet.

    `poset` is anything with a `nodes` collection of vertex sets (or a bare
    collection of sets); `pattern` is (size, strict relations) as produced
    by crown_pattern. Order is set inclusion. Guarded at `max_nodes`.
    """
    nodes = tuple(getattr(poset, "nodes", poset))
    if len(nodes) > max_nodes:
        raise ValueError(f"induced-subposet scan guarded at {max_nodes} nodes")
    size, less = pattern
    image: list[frozenset[int]] = []

    def matches(candidate, idx):
        if candidate in image:
            return False
        for j in range(idx):
            expect_less = (j, idx) in less
            expect_greater = (idx, j) in less
            if (image[j] < candidate) != expect_less:
                return False
            if (candidate < image[j]) != expect_greater:
                return False
        return True

    def place(idx):
        if idx == size:
            return True
        for candidate in nodes:
            if matches(candidate, idx):
                image.append(candidate)
                if place(idx + 1):
                    return True
                image.pop()
        return False

    return tuple(image) if place(0) else None


def brute_minimal_separators(
    g: Graph, max_vertices: int = 8
) -> frozenset[frozenset[int]]:
    """All minimal vertex separators by exhaustive subset checking.

    A set S is collected when it is a minimal (a, b)-separator for some
    nonadjacent pair a, b in one component: S separates them but no single
    removal from S does. Guarded at `max_vertices`.
    """
    if g.n > max_vertices:
        raise ValueError(
            f"separator scan guarded at {max_vertices} vertices, got {g.n}"
        )
    found = set()
    vs = g.vertices
    for a, b in combinations(vs, 2):
        if g.has_edge(a, b) or b not in g.component_of(a):
            continue
        for s in iter_subsets(g.vertex_set - {a, b}):
            if not _separates(g, s, a, b):
                continue
            if all(not _separates(g, s - {x}, a, b) for x in s):
                found.add(s)
    return frozenset(found)


def _separates(g, s, a, b):
    return b not in g.component_of(a, forbidden=frozenset(s))
