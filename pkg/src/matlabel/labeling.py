"""Edge labelings, the MAT-labeling verifier, and MAT-simplicial machinery.

A labeling maps every edge to a positive integer. Writing pi_k for the
edges labeled k and E_k for the union of the first k blocks, a labeling is
a MAT-labeling when, for every k:

  ML1  pi_k is a forest;
  ML2  no edge of E_{k-1} has its endpoints connected by a path in pi_k
       (matroid closure of pi_k avoids all earlier edges);
  ML3  every edge of pi_k lies in exactly k-1 triangles whose other two
       edges are in E_{k-1}.

Violations are reported as values, never exceptions: the verifier is a
total function used to classify arbitrary labelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import Graph, canonical_edge


class EdgeLabeling:
    """A total map from the edges of a graph to positive integer labels."""

    __slots__ = ("graph", "_labels")

    def __init__(self, graph: Graph, labels: Mapping[tuple[int, int], int]):
        canon = {}
        for (u, v), k in labels.items():
            e = canonical_edge(u, v)
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise ValueError(f"label of {e} must be a positive integer, got {k!r}")
            if e in canon:
                raise ValueError(f"duplicate label entry for edge {e}")
            canon[e] = k
        missing = set(graph.edges) - set(canon)
        extra = set(canon) - set(graph.edges)
        if missing or extra:
            raise ValueError(
                f"label domain must equal the edge set "
                f"(missing {sorted(missing)}, extra {sorted(extra)})"
            )
        self.graph = graph
        self._labels = canon

    def label(self, u: int, v: int) -> int:
        return self._labels[canonical_edge(u, v)]

    @property
    def labels(self) -> dict[tuple[int, int], int]:
        return dict(self._labels)

    def items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return tuple(sorted(self._labels.items()))

    @property
    def max_label(self) -> int:
        return max(self._labels.values(), default=0)

    def blocks(self) -> "LabelBlocks":
        return LabelBlocks.from_labeling(self)

    def block_sizes(self) -> tuple[int, ...]:
        """(|pi_1|, ..., |pi_max|)."""
        blocks = self.blocks().blocks
        return tuple(len(blocks[k]) for k in range(1, self.max_label + 1))

    def restrict_vertices(self, s: Iterable[int]) -> "EdgeLabeling":
        """Restriction to the induced subgraph on s."""
        sub = self.graph.induced_subgraph(s)
        return EdgeLabeling(sub, {e: self._labels[e] for e in sub.edges})

    def restrict_edges(self, edges: Iterable[tuple[int, int]]) -> "EdgeLabeling":
        """Restriction to the subgraph (V, F) for an edge subset F."""
        fs = {canonical_edge(*e) for e in edges}
        unknown = fs - set(self._labels)
        if unknown:
            raise ValueError(f"not edges of the graph: {sorted(unknown)}")
        sub = Graph(self.graph.vertices, fs)
        return EdgeLabeling(sub, {e: self._labels[e] for e in fs})

    def with_label(self, u: int, v: int, k: int) -> "EdgeLabeling":
        """Copy with one edge relabeled (used for mutation testing)."""
        labels = self.labels
        labels[canonical_edge(u, v)] = k
        return EdgeLabeling(self.graph, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeLabeling):
            return NotImplemented
        return self.graph == other.graph and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self.graph, tuple(sorted(self._labels.items()))))

    def __repr__(self) -> str:
        inner = ", ".join(f"{u}-{v}:{k}" for (u, v), k in self.items())
        return f"EdgeLabeling({inner})"


@dataclass(frozen=True)
class LabelBlocks:
    """Blocks pi_k = labels^{-1}(k) and prefixes E_k = pi_1 + ... + pi_k."""

    blocks: dict[int, frozenset[tuple[int, int]]]
    prefixes: dict[int, frozenset[tuple[int, int]]]

    @classmethod
    def from_labeling(cls, lab: EdgeLabeling) -> "LabelBlocks":
        top = lab.max_label
        blocks = {k: set() for k in range(1, top + 1)}
        for e, k in lab.items():
            blocks[k].add(e)
        prefixes: dict[int, frozenset] = {0: frozenset()}
        acc: set = set()
        for k in range(1, top + 1):
            acc |= blocks[k]
            prefixes[k] = frozenset(acc)
        return cls({k: frozenset(v) for k, v in blocks.items()}, prefixes)


@dataclass(frozen=True)
class MatViolation:
    """A checkable witness that a labeling or vertex fails one condition.

    kind is one of ML1-cycle, ML2-closure, ML3-triangle-count, MS1, MS2,
    MS3; level is the block index (or offending label) involved.
    """

    kind: str
    level: int
    edges: tuple[tuple[int, int], ...] = ()
    vertices: tuple[int, ...] = ()
    detail: str = ""

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "level": self.level,
            "edges": [list(e) for e in self.edges],
            "vertices": list(self.vertices),
            "detail": self.detail,
        }


def _forest_components(edges):
    """Union-find over the given edges; returns (find, cycle_edge | None)."""
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycle_edge = None
    for u, v in sorted(edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            if cycle_edge is None:
                cycle_edge = (u, v)
            continue
        parent[ru] = rv
    return find, cycle_edge


def _path_in(edges, src, dst):
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    prev = {src: None}
    queue = [src]
    while queue:
        x = queue.pop(0)
        if x == dst:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return tuple(reversed(path))
        for y in sorted(adj.get(x, ())):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def verify_mat_labeling(lab: EdgeLabeling) -> MatViolation | None:
    """None iff lab satisfies ML1, ML2 and ML3 for every level.

    Levels run from 1 to the maximum label; blocks that are empty in
    between are allowed structurally and surface, when illegal, as a
    triangle-count violation on some later edge.
    """
    g = lab.graph
    data = lab.blocks()
    for k in range(1, lab.max_label + 1):
        pi_k = data.blocks[k]
        find, cycle_edge = _forest_components(pi_k)
        if cycle_edge is not None:
            u, v = cycle_edge
            path = _path_in(pi_k - {cycle_edge}, u, v)
            cycle = tuple(
                canonical_edge(a, b) for a, b in zip(path, path[1:])
            ) + (cycle_edge,)
            return MatViolation(
                "ML1-cycle", k, edges=cycle,
                detail=f"edges labeled {k} contain a cycle",
            )
        for f in sorted(data.prefixes[k - 1]):
            x, y = f
            if find(x) == find(y):
                path = _path_in(pi_k, x, y)
                witness = tuple(canonical_edge(a, b) for a, b in zip(path, path[1:]))
                return MatViolation(
                    "ML2-closure", k, edges=(f,) + witness,
                    detail=f"edge {f} labeled {lab.label(*f)} is spanned by "
                           f"edges labeled {k}",
                )
        for e in sorted(pi_k):
            u, v = e
            count = sum(
                1
                for w in g.common_neighbors(u, v)
                if lab.label(u, w) < k and lab.label(v, w) < k
            )
            if count != k - 1:
                return MatViolation(
                    "ML3-triangle-count", k, edges=(e,),
                    detail=f"edge {e} labeled {k} closes {count} triangles "
                           f"with earlier labels, needs {k - 1}",
                )
    return None


def mat_simplicial_violation(lab: EdgeLabeling, v: int) -> MatViolation | None:
    """First failed MAT-simpliciality condition at vertex v, or None.

    MS1: v is simplicial. MS2: the labels incident to v are exactly
    1..deg(v). MS3: every edge inside N(v) is labeled strictly below the
    larger of its endpoints' labels toward v.
    """
    g = lab.graph
    nbrs = sorted(g.neighborhood(v))
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not g.has_edge(a, b):
                return MatViolation(
                    "MS1", 0, vertices=(v, a, b),
                    detail=f"neighbors {a}, {b} of {v} are nonadjacent",
                )
    incident = sorted(lab.label(u, v) for u in nbrs)
    if incident != list(range(1, len(nbrs) + 1)):
        return MatViolation(
            "MS2", 0, vertices=(v,),
            detail=f"labels at {v} are {incident}, need 1..{len(nbrs)}",
        )
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            bound = max(lab.label(a, v), lab.label(b, v))
            if lab.label(a, b) >= bound:
                return MatViolation(
                    "MS3", lab.label(a, b), edges=(canonical_edge(a, b),),
                    vertices=(v,),
                    detail=f"label {lab.label(a, b)} of {canonical_edge(a, b)} "
                           f"not below max({lab.label(a, v)}, {lab.label(b, v)})",
                )
    return None


def is_mat_simplicial(lab: EdgeLabeling, v: int) -> bool:
    return mat_simplicial_violation(lab, v) is None


def find_mat_peo(lab: EdgeLabeling) -> list[int] | None:
    """Ordering with every prefix vertex MAT-simplicial, or None.

    Greedy removal of the smallest MAT-simplicial vertex. Removing a
    MAT-simplicial vertex preserves validity and invalidity alike, so the
    greedy search succeeds exactly when the labeling is a MAT-labeling.
    """
    current = lab
    removal: list[int] = []
    while current.graph.n:
        for v in current.graph.vertices:
            if is_mat_simplicial(current, v):
                removal.append(v)
                current = current.restrict_vertices(current.graph.vertex_set - {v})
                break
        else:
            return None
    return removal[::-1]


def is_mat_peo(lab: EdgeLabeling, order) -> bool:
    """Check the MAT-PEO condition on every prefix of an ordering."""
    seq = list(order)
    if sorted(seq) != list(lab.graph.vertices):
        raise ValueError("ordering is not a permutation of the vertex set")
    for i in range(len(seq), 0, -1):
        prefix = lab.restrict_vertices(seq[:i])
        if not is_mat_simplicial(prefix, seq[i - 1]):
            return False
    return True


def largest_clique_edges(lab: EdgeLabeling) -> dict[tuple[int, int], frozenset[int]]:
    """Map each top-label edge to the unique maximal clique containing it.

    For a verified labeling of a chordal graph the top label is the clique
    number minus one, the map is injective, and its image is exactly the
    set of largest cliques. Returns {} for edgeless graphs.
    """
    from .poset import maximal_cliques

    violation = verify_mat_labeling(lab)
    if violation is not None:
        raise ValueError(f"labeling is invalid: {violation.detail}")
    if lab.graph.m == 0:
        return {}
    cliques = maximal_cliques(lab.graph)
    omega = max(len(c) for c in cliques)
    top = lab.max_label
    assert top == omega - 1, "top label of a valid labeling is the clique number minus 1"
    out = {}
    for e in sorted(lab.blocks().blocks[top]):
        containing = [c for c in cliques if e[0] in c and e[1] in c]
        assert len(containing) == 1, f"edge {e} lies in {len(containing)} maximal cliques"
        out[e] = containing[0]
    largest = {c for c in cliques if len(c) == omega}
    assert set(out.values()) == largest and len(set(out.values())) == len(out)
    return out
