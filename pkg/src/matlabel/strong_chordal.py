"""Strong chordality recognition and forbidden-structure detection.

A graph is strongly chordal when it is chordal and contains no induced
n-sun for any n >= 3. The production recognizer runs in polynomial time by
greedily eliminating simple vertices; sun detection provides witnesses and
an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import find_chordless_cycle, is_chordal
from .graph import Graph


def is_simple_vertex(g: Graph, v: int) -> bool:
    """True iff the closed neighborhoods of N[v] form an inclusion chain.

    Simple vertices are in particular simplicial; greedy removal of simple
    vertices succeeds exactly on strongly chordal graphs.
    """
    closed = [g.closed_neighborhood(u) for u in sorted(g.closed_neighborhood(v))]
    closed.sort(key=len)
    return all(a <= b for a, b in zip(closed, closed[1:]))


def find_simple_elimination_ordering(g: Graph) -> list[int] | None:
    """Ordering (v_1, ..., v_l) with v_i simple in g[{v_1..v_i}], or None.

    Greedy: repeatedly remove the smallest simple vertex. Strong chordality
    is hereditary and guarantees a simple vertex at every step, so the
    greedy choice is never wrong; getting stuck proves no such ordering
    exists.
    """
    current = g
    removal: list[int] = []
    while current.n:
        for v in current.vertices:
            if is_simple_vertex(current, v):
                removal.append(v)
                current = current.delete_vertex(v)
                break
        else:
            return None
    return removal[::-1]


def is_strongly_chordal(g: Graph) -> bool:
    return find_simple_elimination_ordering(g) is not None


@dataclass(frozen=True)
class SunWitness:
    """An induced n-sun: `inner` is the central clique in cyclic order and
    outer[i] is adjacent to exactly inner[i] and inner[(i+1) % n]."""

    n: int
    inner: tuple[int, ...]
    outer: tuple[int, ...]

    def as_json(self) -> dict:
        return {"kind": "sun", "n": self.n,
                "inner": list(self.inner), "outer": list(self.outer)}


def detect_induced_sun(g: Graph, n_max: int | None = None) -> SunWitness | None:
    """Smallest induced n-sun with 3 <= n <= n_max, or None.

    Backtracking over the central clique then the outer vertices, trying
    candidates in ascending order, so the returned witness is the
    lexicographically least tuple (inner + outer) for the smallest n.
    Default n_max is |V| // 2 (a sun needs 2n vertices).
    """
    if n_max is None:
        n_max = g.n // 2
    elif n_max < 3:
        raise ValueError("n_max must be at least 3")
    for n in range(3, n_max + 1):
        hit = _find_sun(g, n)
        if hit is not None:
            return SunWitness(n, hit[:n], hit[n:])
    return None


def _find_sun(g, n):
    verts = g.vertices
    chosen: list[int] = []

    def ok_inner(v, idx):
        return all(g.has_edge(v, chosen[j]) for j in range(idx))

    def ok_outer(v, idx):
        # outer position idx attaches to inner idx and idx+1 (cyclically)
        if v in chosen:
            return False
        want = {chosen[idx], chosen[(idx + 1) % n]}
        for j, u in enumerate(chosen[:n]):
            if g.has_edge(v, u) != (u in want):
                return False
        return all(not g.has_edge(v, w) for w in chosen[n:])

    def place(idx):
        if idx == 2 * n:
            return True
        for v in verts:
            if idx < n:
                if v in chosen or not ok_inner(v, idx):
                    continue
            elif not ok_outer(v, idx - n):
                continue
            chosen.append(v)
            if place(idx + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if place(0) else None


def find_induced_subgraph(g: Graph, pattern: Graph) -> dict[int, int] | None:
    """Injective map from pattern vertices to g realizing pattern as an
    induced subgraph, or None. Deterministic, smallest-image-first."""
    pverts = pattern.vertices
    gverts = g.vertices
    image: list[int] = []

    def place(idx):
        if idx == len(pverts):
            return True
        p = pverts[idx]
        for v in gverts:
            if v in image:
                continue
            if any(
                g.has_edge(v, image[j]) != pattern.has_edge(p, pverts[j])
                for j in range(idx)
            ):
                continue
            image.append(v)
            if place(idx + 1):
                return True
            image.pop()
        return False

    if place(0):
        return dict(zip(pverts, image))
    return None


def claw() -> Graph:
    """K_{1,3}: center 1 with leaves 2, 3, 4."""
    return Graph.from_edges([(1, 2), (1, 3), (1, 4)])


def net() -> Graph:
    """Triangle 1-2-3 with a pendant vertex on each corner."""
    return Graph.from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])


def unit_interval_obstruction(g: Graph):
    """First forbidden structure for unit interval graphs, or None.

    Returns ("chordless-cycle", vertices), ("claw", map), ("net", map) or
    ("sun", SunWitness). A graph is unit interval iff this returns None.
    """
    cyc = find_chordless_cycle(g)
    if cyc is not None:
        return ("chordless-cycle", cyc)
    hit = find_induced_subgraph(g, claw())
    if hit is not None:
        return ("claw", hit)
    hit = find_induced_subgraph(g, net())
    if hit is not None:
        return ("net", hit)
    sun = detect_induced_sun(g, 3) if g.n >= 6 else None
    if sun is not None:
        return ("sun", sun)
    return None


def is_unit_interval(g: Graph) -> bool:
    """Chordal with no induced claw, net or 3-sun."""
    return is_chordal(g) and unit_interval_obstruction(g) is None
