"""Exponents, chromatic polynomials and factorization cross-checks.

The exponents of the arrangement attached to a graph are read off a
MAT-labeling as the dual partition of its block sizes, and independently
off any PEO of a chordal graph as earlier-neighbor counts; both must agree
with the roots of the chromatic polynomial. All arithmetic is exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chordal import exponents_along, find_peo, minimal_separator_decomposition
from .errors import NotChordalError
from .graph import Graph
from .labeling import EdgeLabeling, verify_mat_labeling


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        """Monic product of (t - r) over the given integer roots."""
        poly = cls.one()
        for r in roots:
            poly = poly * cls((-r, 1))
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (size - len(self.coeffs))
        b = list(other.coeffs) + [0] * (size - len(other.coeffs))
        return IntPolynomial(tuple(x - y for x, y in zip(a, b)))

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "t" if i == 1 else f"t^{i}" if i else ""
            mag = "" if abs(c) == 1 and i else str(abs(c))
            parts.append(("-" if c < 0 else "+", f"{mag}{term}"))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def exponents_from_labeling(lab: EdgeLabeling) -> tuple[int, ...]:
    """Exponents as the dual partition of the labeling's block sizes.

    With l = |V| and blocks pi_1..pi_n, the i-th exponent is the number of
    blocks of size at least l - i + 1; the result has exactly l entries
    (zeros padded by the same formula) and is sorted ascending.
    """
    violation = verify_mat_labeling(lab)
    if violation is not None:
        raise ValueError(f"labeling is invalid: {violation.detail}")
    sizes = lab.block_sizes()
    ell = lab.graph.n
    return tuple(
        sum(1 for s in sizes if s >= ell - i + 1) for i in range(1, ell + 1)
    )


def chromatic_polynomial(
    g: Graph, guard: int = 12, method: str = "auto"
) -> IntPolynomial:
    """Exact chromatic polynomial.

    method "auto" uses the PEO product for chordal graphs (any size) and
    deletion-contraction otherwise; "peo" and "deletion-contraction" force
    one route. Deletion-contraction is guarded at `guard` vertices and
    memoizes on relabeled canonical forms for graphs of at most 10
    vertices.
    """
    if method not in ("auto", "peo", "deletion-contraction"):
        raise ValueError(f"unknown method {method!r}")
    if method != "deletion-contraction":
        order = find_peo(g)
        if order is not None:
            return IntPolynomial.from_roots(exponents_along(g, order))
        if method == "peo":
            raise NotChordalError("PEO product requires a chordal graph")
    if g.n > guard:
        raise ValueError(
            f"deletion-contraction guarded at {guard} vertices, got {g.n}"
        )
    return _deletion_contraction(g, {})


def _canonical_form(g: Graph):
    relabel = {v: i for i, v in enumerate(g.vertices)}
    return (g.n, frozenset((relabel[u], relabel[v]) for u, v in g.edges))


def _deletion_contraction(g: Graph, memo) -> IntPolynomial:
    if g.m == 0:
        return IntPolynomial(tuple([0] * g.n + [1]))  # t^n
    components = g.components()
    if len(components) > 1:
        poly = IntPolynomial.one()
        for comp in components:
            poly = poly * _deletion_contraction(g.induced_subgraph(comp), memo)
        return poly
    key = _canonical_form(g) if g.n <= 10 else None
    if key is not None and key in memo:
        return memo[key]
    e = g.edges[0]
    deleted = Graph(g.vertices, [f for f in g.edges if f != e])
    contracted = g.contract_edge(e)
    poly = _deletion_contraction(deleted, memo) - _deletion_contraction(contracted, memo)
    if key is not None:
        memo[key] = poly
    return poly


def check_terao_factorization(g: Graph, exponents: Sequence[int]) -> bool:
    """True iff the chromatic polynomial equals prod (t - d) over exponents."""
    return chromatic_polynomial(g) == IntPolynomial.from_roots(exponents)


def separator_product_check(g: Graph, a: int, b: int) -> bool:
    """Verify the clique-separator product identity for the chromatic polynomial.

    With (S, A, B) a minimal separator decomposition of a chordal graph,
    chi(G) * chi(G[S]) must equal chi(G[A + S]) * chi(G[S + B]) exactly.
    """
    if find_peo(g) is None:
        raise NotChordalError("separator product identity requires a chordal graph")
    s, side_a, side_b = minimal_separator_decomposition(g, a, b)
    left = chromatic_polynomial(g) * chromatic_polynomial(g.induced_subgraph(s))
    right = chromatic_polynomial(
        g.induced_subgraph(side_a | s)
    ) * chromatic_polynomial(g.induced_subgraph(s | side_b))
    return left == right
