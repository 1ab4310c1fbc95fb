"""Immutable simple-graph values and the primitive queries everything else uses."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Return the edge {u, v} as an ordered pair (smaller id first)."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _check_vertex_id(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ValueError(f"vertex ids must be nonnegative integers, got {v!r}")
    return v


class Graph:
    """Simple undirected graph with nonnegative integer vertex ids.

    Graphs are immutable values: operations that change the graph return a
    new one. Vertex ids need not be contiguous. Every derived vertex or
    edge sequence is reported sorted ascending, so equal graphs always
    print and serialize identically.
    """

    __slots__ = ("_vertices", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {_check_vertex_id(v): set() for v in vertices}
        for u, v in edges:
            u, v = canonical_edge(_check_vertex_id(u), _check_vertex_id(v))
            adj.setdefault(u, set())
            adj.setdefault(v, set())
            adj[u].add(v)
            adj[v].add(u)
        self._vertices: tuple[int, ...] = tuple(sorted(adj))
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in self._vertices}
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls((), edges)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._vertices)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self._vertices)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v
        )

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighborhood(self, v: int) -> frozenset[int]:
        """Open neighborhood N(v)."""
        self._require_vertex(v)
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """Closed neighborhood N[v] = N(v) + v."""
        return self.neighborhood(v) | {v}

    def degree(self, v: int) -> int:
        return len(self.neighborhood(v))

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        return self.neighborhood(u) & self.neighborhood(v)

    def is_clique(self, s: Iterable[int]) -> bool:
        """True iff the vertices of s are pairwise adjacent (vacuous for |s| <= 1)."""
        vs = self._require_subset(s)
        return all(self.has_edge(u, v) for u, v in combinations(sorted(vs), 2))

    # -- derived graphs ------------------------------------------------

    def induced_subgraph(self, s: Iterable[int]) -> "Graph":
        """Subgraph on vertex set s with all edges of this graph inside s."""
        vs = self._require_subset(s)
        edges = ((u, v) for u in vs for v in self._adj[u] if u < v and v in vs)
        return Graph(vs, edges)

    def delete_vertex(self, v: int) -> "Graph":
        self._require_vertex(v)
        return self.induced_subgraph(self.vertex_set - {v})

    def contract_edge(self, e: tuple[int, int]) -> "Graph":
        """Identify the endpoints of e, keeping the smaller id; drops loops and
        duplicate adjacencies."""
        u, v = canonical_edge(*e)
        if not self.has_edge(u, v):
            raise ValueError(f"{(u, v)} is not an edge")
        merged = (self._adj[u] | self._adj[v]) - {u, v}
        edges = [(x, y) for x, y in self.edges if v not in (x, y) and u not in (x, y)]
        edges.extend((u, w) for w in merged)
        return Graph(self.vertex_set - {v}, edges)

    def add_vertex(self, v: int, neighbors: Iterable[int] = ()) -> "Graph":
        """New graph with vertex v joined to the given existing vertices."""
        nbrs = self._require_subset(neighbors)
        if v in self._adj:
            raise ValueError(f"vertex {v} already present")
        _check_vertex_id(v)
        return Graph(self.vertex_set | {v}, list(self.edges) + [(v, w) for w in nbrs])

    # -- connectivity --------------------------------------------------

    def component_of(self, v: int, forbidden: frozenset[int] = frozenset()) -> frozenset[int]:
        """Vertices reachable from v without entering `forbidden`."""
        self._require_vertex(v)
        if v in forbidden:
            raise ValueError(f"start vertex {v} is forbidden")
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen and y not in forbidden:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def components(self) -> tuple[frozenset[int], ...]:
        out = []
        left = set(self._vertices)
        while left:
            comp = self.component_of(min(left))
            out.append(comp)
            left -= comp
        return tuple(sorted(out, key=sorted_key))

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self.edges)))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)}, edges={list(self.edges)})"

    # -- internals -------------------------------------------------------

    def _require_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise ValueError(f"unknown vertex id {v}")

    def _require_subset(self, s: Iterable[int]) -> frozenset[int]:
        vs = frozenset(s)
        unknown = vs - set(self._vertices)
        if unknown:
            raise ValueError(f"unknown vertex ids {sorted(unknown)}")
        return vs


def sorted_key(s: Iterable[int]) -> tuple[int, ...]:
    """Canonical sort key for vertex sets: by size, then elementwise."""
    t = tuple(sorted(s))
    return (len(t),) + t


def sorted_sets(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Vertex sets in the canonical (size, elements) order."""
    return tuple(sorted((frozenset(s) for s in sets), key=sorted_key))


def iter_subsets(items: Iterable[int]) -> Iterator[frozenset[int]]:
    """All subsets of items, smallest first, deterministic order."""
    base = sorted(items)
    for r in range(len(base) + 1):
        for combo in combinations(base, r):
            yield frozenset(combo)
