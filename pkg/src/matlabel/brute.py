"""Exhaustive search for MAT-labelings, independent of the constructor.

Backtracks over label assignments with ascending label values, pruning
with incremental forms of the three labeling conditions only: per-level
component tracking for the forest and closure conditions, and per-edge
label bounds propagated through triangle-count budgets. Edges whose
envelope leaves a single feasible label are assigned immediately; forced
values belong to every valid completion, so with canonical branching the
first complete assignment found is the lexicographically least valid
labeling. Serves as the existence oracle against which the
polynomial-time recognizer and the constructor are cross-checked.
"""

from __future__ import annotations

from .graph import Graph
from .labeling import EdgeLabeling


def _clique_number(g: Graph) -> int:
    """Exact clique number by plain branch and bound (self-contained)."""
    adj = {v: g.neighborhood(v) for v in g.vertices}
    best = 1 if g.n else 0

    def grow(clique_size, candidates):
        nonlocal best
        if not candidates:
            best = max(best, clique_size)
            return
        rest = sorted(candidates)
        while rest:
            if clique_size + len(rest) <= best:
                return
            v = rest.pop()
            grow(clique_size + 1, [u for u in rest if u in adj[v]])

    grow(0, list(g.vertices))
    return best


class _Levels:
    """Connected components of every label block, with O(1) queries.

    comp[k][v] is the component id of v among the edges labeled k; unions
    relabel the smaller component and log each relabel, so undo is exact.
    """

    __slots__ = ("comp", "members", "trail")

    def __init__(self, n, levels):
        self.comp = [list(range(n)) for _ in range(levels + 1)]
        self.members = [[[v] for v in range(n)] for _ in range(levels + 1)]
        self.trail: list[tuple[int, int, int]] = []

    def connected(self, k, u, v):
        row = self.comp[k]
        return row[u] == row[v]

    def union(self, k, u, v):
        """Merge the components of u and v at level k; they must differ.

        Returns the member lists of the two merged sides as they were
        before the merge (small side first)."""
        comp = self.comp[k]
        members = self.members[k]
        cu, cv = comp[u], comp[v]
        if len(members[cu]) > len(members[cv]):
            cu, cv = cv, cu
        small = members[cu]
        big_before = list(members[cv])
        trail = self.trail
        target = members[cv]
        for x in small:
            comp[x] = cv
            target.append(x)
            trail.append((k, x, cu))
        return small, big_before

    def undo(self, mark):
        while len(self.trail) > mark:
            k, x, old = self.trail.pop()
            self.members[k][self.comp[k][x]].pop()
            self.comp[k][x] = old


class _Search:
    def __init__(self, g: Graph, max_label: int):
        self.max_label = max_label
        index = {v: i for i, v in enumerate(g.vertices)}
        self.gedges = g.edges
        self.edges = [(index[u], index[v]) for u, v in self.gedges]
        self.m = len(self.edges)
        self.n = g.n
        eid = {}
        for i, e in enumerate(self.edges):
            eid[e] = i
            eid[(e[1], e[0])] = i
        self.eid = eid
        # triangles[e] lists (f1, f2): ids of the two other edges of each
        # triangle through e
        tri: list[list[tuple[int, int]]] = [[] for _ in range(self.m)]
        for i, (u, v) in enumerate(self.gedges):
            for w in sorted(g.common_neighbors(u, v)):
                iu, iv, iw = index[u], index[v], index[w]
                tri[i].append((eid[(iu, iw)], eid[(iv, iw)]))
        self.triangles = [tuple(t) for t in tri]
        self.cap = [
            min(max_label, len(self.triangles[i]) + 1) for i in range(self.m)
        ]
        # summing the count condition over all edges, each triangle feeds
        # at most one edge (a unique top label), so sum(label - 1) is at
        # most the number of triangles in the graph
        self.triangle_budget = sum(len(t) for t in self.triangles) // 3
        self.labels = [0] * self.m
        # per assigned edge: closed = triangles already counting toward its
        # quota of label-1 many, open_ = triangles that may still count
        self.closed = [0] * self.m
        self.open_ = [0] * self.m
        self.levels = _Levels(self.n, max_label)
        self.deltas: list[tuple[int, int, int]] = []  # (edge, dclosed, dopen)
        self.trail: list[tuple[int, int, int, int]] = []  # (e, k, lv_mark, d_mark)

    # -- bookkeeping ---------------------------------------------------

    def _adjust(self, f, dc, do):
        self.closed[f] += dc
        self.open_[f] += do
        self.deltas.append((f, dc, do))
        k = self.labels[f]
        return self.closed[f] <= k - 1 <= self.closed[f] + self.open_[f]

    def _retick(self, other, k, mate):
        """Refresh `other`'s counters after a triangle side of it got k."""
        lo = self.labels[other]
        lm = self.labels[mate]
        if lm:
            if lm >= lo:
                return True  # triangle was already dead
            if k < lo:
                return self._adjust(other, +1, -1)
            return self._adjust(other, 0, -1)
        if k >= lo:
            return self._adjust(other, 0, -1)
        return True  # still open, pending the mate

    def undo_to(self, trail_mark):
        while len(self.trail) > trail_mark:
            e, k, lv_mark, delta_mark = self.trail.pop()
            while len(self.deltas) > delta_mark:
                f, dc, do = self.deltas.pop()
                self.closed[f] -= dc
                self.open_[f] -= do
            self.labels[e] = 0
            self.levels.undo(lv_mark)

    # -- constraint reasoning -------------------------------------------

    def _bounds_fixpoint(self):
        """Per-edge label bounds from triangle-count budgets, to fixpoint.

        Floors come from block connectivity (endpoints joined inside block
        j force a label above j). A triangle can still count toward an
        edge at level k only if both side labels can end below k, and must
        count if both surely do; level k survives when the forced count is
        at most k - 1 and the possible count at least k - 1. The global
        triangle budget caps sum(label - 1). Every deduction discards only
        labels no valid completion of the current assignment can use.

        Returns None on contradiction, else per-edge feasible label lists
        (assigned edges map to their label).
        """
        m, labels, triangles = self.m, self.labels, self.triangles
        comp = self.levels.comp
        edges = self.edges
        max_label = self.max_label
        lb = [0] * m
        ub = [0] * m
        for f in range(m):
            lf = labels[f]
            if lf:
                lb[f] = ub[f] = lf
            else:
                u, v = edges[f]
                floor = 1
                for j in range(max_label, 0, -1):
                    row = comp[j]
                    if row[u] == row[v]:
                        floor = j + 1
                        break
                if floor > self.cap[f]:
                    return None
                lb[f] = floor
                ub[f] = self.cap[f]
        options: list = [None] * m
        budget = self.triangle_budget
        while True:
            changed = False
            spent = sum(lb) - m  # lower bound on sum of (label - 1)
            if spent > budget:
                return None
            for f in range(m):
                lf = labels[f]
                if lf:
                    possible = forced = 0
                    for a, b in triangles[f]:
                        if lb[a] < lf and lb[b] < lf:
                            possible += 1
                            if ub[a] < lf and ub[b] < lf:
                                forced += 1
                    if not forced <= lf - 1 <= possible:
                        return None
                    options[f] = (lf,)
                    continue
                slack = budget - spent + lb[f]  # max label by global budget
                if slack < ub[f]:
                    ub[f] = slack
                    changed = True
                    if lb[f] > ub[f]:
                        return None
                feas = []
                for k in range(lb[f], ub[f] + 1):
                    possible = forced = 0
                    for a, b in triangles[f]:
                        if lb[a] < k and lb[b] < k:
                            possible += 1
                            if ub[a] < k and ub[b] < k:
                                forced += 1
                    if forced <= k - 1 <= possible:
                        feas.append(k)
                if not feas:
                    return None
                options[f] = feas
                if feas[0] > lb[f]:
                    spent += feas[0] - lb[f]
                    lb[f] = feas[0]
                    changed = True
                if feas[-1] < ub[f]:
                    ub[f] = feas[-1]
                    changed = True
            if not changed:
                return options

    def assign(self, e, k):
        """Apply labels[e] = k with all incremental checks."""
        u, v = self.edges[e]
        levels = self.levels
        if levels.connected(k, u, v):
            return False  # cycle inside block k
        for j in range(k + 1, self.max_label + 1):
            if levels.connected(j, u, v):
                return False  # e would be spanned by a later block
        lv_mark = len(levels.trail)
        delta_mark = len(self.deltas)
        side_a, side_b = levels.union(k, u, v)
        labels = self.labels
        eid = self.eid
        spans_earlier = False
        for x in side_a:  # only pairs across the merged sides are new
            for y in side_b:
                f = eid.get((x, y))
                if f is not None and labels[f] and labels[f] < k:
                    spans_earlier = True
                    break
            if spans_earlier:
                break
        if spans_earlier:
            levels.undo(lv_mark)
            return False  # block k now spans an earlier edge
        labels[e] = k
        self.trail.append((e, k, lv_mark, delta_mark))
        c = o = 0
        for f1, f2 in self.triangles[e]:
            l1, l2 = labels[f1], labels[f2]
            if l1 and l2:
                if l1 < k and l2 < k:
                    c += 1
            elif (l1 and l1 >= k) or (l2 and l2 >= k):
                pass  # a fixed side at or above k kills the triangle
            else:
                o += 1
        if not self._adjust(e, c, o):
            return False
        for f1, f2 in self.triangles[e]:
            if labels[f1] and not self._retick(f1, k, f2):
                return False
            if labels[f2] and not self._retick(f2, k, f1):
                return False
        return True

    def _propagate(self):
        """Assign forced edges to fixpoint; pick the next branch target.

        Returns False on contradiction, None when everything is assigned,
        else (edge, feasible labels) for the smallest unassigned edge,
        which keeps the first solution lexicographically least.
        """
        while True:
            options = self._bounds_fixpoint()
            if options is None:
                return False
            forced = None
            best = None
            for f in range(self.m):
                if self.labels[f]:
                    continue
                opts = options[f]
                if len(opts) == 1:
                    forced = (f, opts[0])
                    break
                if best is None:
                    best = (f, opts)
            if forced is not None:
                if not self.assign(*forced):
                    return False
                continue
            return best

    def run(self):
        """DFS with unit propagation; labels tried in ascending order."""
        state = self._propagate()
        if state is False:
            return False
        if state is None:
            return True
        e, options = state
        for k in options:
            trail_mark = len(self.trail)
            if self.assign(e, k) and self.run():
                return True
            self.undo_to(trail_mark)
        return False


def brute_force_mat_labeling(
    g: Graph, max_edges: int = 18, max_label: int | None = None
) -> EdgeLabeling | None:
    """The lexicographically least MAT-labeling of g, or None.

    Labels range over [1, omega(g) - 1] for chordal inputs and [1, |V| - 1]
    otherwise (overridable via max_label); independently of either bound,
    an edge with c common neighbors never admits a label above c + 1, since
    a label-k edge must close k - 1 triangles. Inputs with more than
    `max_edges` edges are rejected to keep runtimes bounded.
    """
    if g.m > max_edges:
        raise ValueError(
            f"graph has {g.m} edges, above the guard {max_edges}; "
            f"raise max_edges explicitly to override"
        )
    if g.m == 0:
        return EdgeLabeling(g, {})

    if max_label is None:
        from .chordal import is_chordal

        max_label = (_clique_number(g) - 1) if is_chordal(g) else (g.n - 1)
    if max_label < 1:
        return None

    search = _Search(g, max_label)
    if not search.run():
        return None
    return EdgeLabeling(
        g, {search.gedges[i]: search.labels[i] for i in range(search.m)}
    )
