"""Constructing MAT-labelings of strongly chordal graphs.

Complete graphs are labeled directly (height labeling, or one-vertex-at-a-
time extension). Two compatibly labeled cliques merge into a labeling of
their union clique. A strongly chordal graph is then labeled by building a
family of mutually compatible labelings over its clique intersection
poset, bottom-up in rank, and gluing the maximal-clique labelings together
by plain union. Every greedy choice breaks ties by smallest vertex id, so
the whole construction is a deterministic function of the input graph.
"""

from __future__ import annotations

from .chordal import find_chordless_cycle, find_peo
from .errors import NoLeafPairError, NotStronglyChordalError
from .graph import Graph, canonical_edge, sorted_key, sorted_sets
from .labeling import EdgeLabeling, is_mat_simplicial, verify_mat_labeling
from .poset import CliquePoset, build_poset, find_any_crown, leaf_pair


def _complete(vertices) -> Graph:
    vs = sorted(vertices)
    return Graph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


def height_labeling_complete(ell: int, vertices=None) -> EdgeLabeling:
    """Label K_ell (default vertices 1..ell) by index distance j - i.

    Block sizes are (ell-1, ell-2, ..., 1).
    """
    if ell < 1:
        raise ValueError("need at least one vertex")
    vs = sorted(vertices) if vertices is not None else list(range(1, ell + 1))
    if len(vs) != ell:
        raise ValueError(f"expected {ell} vertices, got {len(vs)}")
    labels = {
        (u, v): j - i
        for i, u in enumerate(vs) for j, v in enumerate(vs) if i < j
    }
    return EdgeLabeling(_complete(vs), labels)


def _require_valid_complete(lab: EdgeLabeling, what: str) -> None:
    g = lab.graph
    if g.m != g.n * (g.n - 1) // 2:
        raise ValueError(f"{what} must be a labeling of a complete graph")
    violation = verify_mat_labeling(lab)
    if violation is not None:
        raise ValueError(f"{what} is not a MAT-labeling: {violation.detail}")


def _greedy_mat_peo_extension(lab: EdgeLabeling, prefix: list[int]) -> list[int]:
    """Extend a MAT-PEO of a sub-clique to the whole labeled complete graph.

    Peels MAT-simplicial vertices outside the prefix from the top; for
    valid labelings of complete graphs one always exists.
    """
    fixed = set(prefix)
    current = lab
    suffix: list[int] = []
    while current.graph.n > len(prefix):
        for v in current.graph.vertices:
            if v not in fixed and is_mat_simplicial(current, v):
                suffix.append(v)
                current = current.restrict_vertices(current.graph.vertex_set - {v})
                break
        else:
            raise AssertionError("no MAT-simplicial vertex outside the prefix")
    return prefix + suffix[::-1]


def _mat_peo_complete(lab: EdgeLabeling) -> list[int]:
    return _greedy_mat_peo_extension(lab, [])


def extend_labeling_complete(
    ell: int, w, lab_w: EdgeLabeling, vertices=None
) -> EdgeLabeling:
    """Extend a MAT-labeling of the clique on w to one of K_ell.

    New vertices are appended one at a time in ascending id order; each new
    vertex v is joined along a MAT-PEO (v_1, ..., v_m) of the current
    labeled clique with label(v_i, v) = i. Default target vertex set is w
    plus the smallest positive integers not in w.
    """
    w = frozenset(w)
    if vertices is None:
        vs = set(w)
        candidate = 1
        while len(vs) < ell:
            if candidate not in vs:
                vs.add(candidate)
            candidate += 1
    else:
        vs = set(vertices)
    if len(vs) != ell or not w <= vs:
        raise ValueError("target vertex set must have size ell and contain w")
    if lab_w.graph.vertex_set != w:
        raise ValueError("lab_w must be a labeling of the clique on w")
    _require_valid_complete(lab_w, "lab_w")
    current = lab_w
    for v in sorted(vs - w):
        order = _mat_peo_complete(current)
        labels = current.labels
        for i, u in enumerate(order, start=1):
            labels[canonical_edge(u, v)] = i
        current = EdgeLabeling(_complete(list(current.graph.vertices) + [v]), labels)
    return current


def merge_complete(a, b, lab_a: EdgeLabeling, lab_b: EdgeLabeling) -> EdgeLabeling:
    """Merge MAT-labelings of the cliques on a and b into one of K_(a | b).

    Requires agreement on the shared clique a & b. A common MAT-PEO
    (a_1..a_p) of the shared part is extended to both sides; the cross
    edge {a_(p+i), b_j} then gets label p + i + j - 1. The result restricts
    to lab_a on a and lab_b on b.
    """
    a, b = frozenset(a), frozenset(b)
    if lab_a.graph.vertex_set != a or lab_b.graph.vertex_set != b:
        raise ValueError("labelings must live on the cliques over a and b")
    _require_valid_complete(lab_a, "lab_a")
    _require_valid_complete(lab_b, "lab_b")
    shared = a & b
    for u, v in _complete(shared).edges:
        if lab_a.label(u, v) != lab_b.label(u, v):
            raise ValueError(
                f"labelings disagree on shared edge {(u, v)}: "
                f"{lab_a.label(u, v)} vs {lab_b.label(u, v)}"
            )
    shared_order = _mat_peo_complete(lab_a.restrict_vertices(shared))
    order_a = _greedy_mat_peo_extension(lab_a, shared_order)
    order_b = _greedy_mat_peo_extension(lab_b, shared_order)
    p = len(shared_order)
    labels = lab_a.labels
    labels.update(lab_b.labels)
    for i, x in enumerate(order_a[p:], start=1):
        for j, y in enumerate(order_b[p:], start=1):
            labels[canonical_edge(x, y)] = p + i + j - 1
    return EdgeLabeling(_complete(a | b), labels)


def _labeling_for_antichain(poset, family, antichain):
    """Compatible labeling of the clique on the union of an antichain.

    Recursively peels the leaf-pair node X0 and merges family[X0] with the
    labeling of the remaining union; the leaf-pair property makes the
    overlap a single shared node, on which the family labelings agree.
    """
    elems = sorted_sets(antichain)
    if len(elems) == 1:
        return family[elems[0]]
    x0, _ = leaf_pair(poset, elems)
    rest = [x for x in elems if x != x0]
    lab_rest = _labeling_for_antichain(poset, family, rest)
    return merge_complete(
        frozenset().union(*rest), x0, lab_rest, family[x0]
    )


def node_family(g: Graph, poset: CliquePoset | None = None):
    """A MAT-labeling for every poset node, closed under restriction.

    Built by rank induction: at node X the labelings of its covered nodes
    are merged (leaf pair by leaf pair) and then extended to all of X.
    Raises NoLeafPairError when the graph is not strongly chordal.
    """
    if poset is None:
        poset = build_poset(g)
    family: dict[frozenset, EdgeLabeling] = {}
    for x in sorted(poset.nodes, key=lambda node: (poset.rank[node], sorted_key(node))):
        covered = poset.covers[x]
        if not covered:
            base = EdgeLabeling(_complete(()), {})
        else:
            base = _labeling_for_antichain(poset, family, covered)
        if base.graph.vertex_set != x:
            base = extend_labeling_complete(
                len(x), base.graph.vertex_set, base, vertices=x
            )
        family[x] = base
    return family


def _glue_antichain(poset, family, antichain):
    """Union of the family labelings over an antichain of maximal cliques.

    Gluing is a plain union of label maps; the leaf-pair order guarantees
    each peeled clique meets the rest in a single shared clique, where the
    labels agree by family compatibility.
    """
    elems = sorted_sets(antichain)
    if len(elems) == 1:
        lab = family[elems[0]]
        return set(lab.graph.vertices), lab.labels
    x0, _ = leaf_pair(poset, elems)
    rest = [x for x in elems if x != x0]
    vertices, labels = _glue_antichain(poset, family, rest)
    lab0 = family[x0]
    for e, k in lab0.items():
        if labels.setdefault(e, k) != k:
            raise AssertionError(f"glue conflict at edge {e}")
    vertices |= set(lab0.graph.vertices)
    return vertices, labels


def construct_mat_labeling(g: Graph) -> EdgeLabeling:
    """A MAT-labeling of a strongly chordal graph.

    Non strongly chordal inputs are rejected with a structured witness:
    a chordless cycle when the graph is not chordal, otherwise a crown of
    the clique intersection poset (surfaced by a failing leaf-pair search).
    """
    if find_peo(g) is None:
        raise NotStronglyChordalError("chordless-cycle", find_chordless_cycle(g))
    poset = build_poset(g)
    try:
        family = node_family(g, poset)
        vertices, labels = _glue_antichain(
            poset, family, sorted_sets(poset.maximal_nodes)
        )
    except NoLeafPairError:
        crown = find_any_crown(poset)
        assert crown is not None, "leaf-pair failure must come with a crown"
        raise NotStronglyChordalError("crown", crown) from None
    result = EdgeLabeling(Graph(vertices, labels.keys()), labels)
    assert result.graph == g, "glued labeling must cover the input graph"
    assert verify_mat_labeling(result) is None
    return result
