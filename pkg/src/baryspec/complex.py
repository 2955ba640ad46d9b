"""Whitney complex of a graph: cliques, clique vectors and Euler data.

A simplex is represented as a sorted tuple of vertex indices spanning a
complete subgraph; its dimension is ``len(simplex) - 1``. Exact quantities
(dimension, curvature, density) are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .graphs import Graph, GraphError
from .stepfunc import StepFunction

__all__ = [
    "iter_clique_levels",
    "enumerate_cliques",
    "whitney_complex",
    "clique_vector",
    "format_clique_vector",
    "parse_clique_vector",
    "euler_characteristic",
    "euler_polynomial",
    "clique_number",
    "graph_density",
    "dimension",
    "degree_function",
    "curvature",
    "curvatures",
    "dimension_coloring",
    "is_proper_coloring",
]

Simplex = tuple[int, ...]


def iter_clique_levels(G: Graph, max_size: int | None = None) -> Iterator[list[Simplex]]:
    """Yield the list of ``k``-vertex cliques for ``k = 1, 2, ...`` in turn.

    Each level is built from the previous one: a clique ``c`` only extends by
    a common neighbor larger than ``max(c)``, so every clique appears once and
    every level comes out in lexicographic order. Stops at the first empty
    level or after ``max_size``.
    """
    adj = G.adjacency
    upper = [frozenset(w for w in adj[v] if w > v) for v in range(G.n)]
    level = [((v,), upper[v]) for v in range(G.n)]
    k = 1
    while level:
        yield [c for c, _ in level]
        if max_size is not None and k >= max_size:
            return
        nxt = []
        for c, cand in level:
            for v in sorted(cand):
                nxt.append((c + (v,), cand & upper[v]))
        level = nxt
        k += 1


def enumerate_cliques(G: Graph, k: int) -> list[Simplex]:
    """All ``k``-vertex complete subgraphs in lexicographic order."""
    if k < 1:
        raise GraphError(f"clique size must be >= 1, got {k}")
    for size, level in enumerate(iter_clique_levels(G, k), 1):
        if size == k:
            return level
    return []


def whitney_complex(G: Graph) -> list[list[Simplex]]:
    """Simplices grouped by dimension: ``result[k]`` holds the ``k``-simplices."""
    return list(iter_clique_levels(G))


def clique_vector(G: Graph) -> tuple[int, ...]:
    return tuple(len(level) for level in iter_clique_levels(G))


def format_clique_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def parse_clique_vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    vals = tuple(int(t) for t in text.split(","))
    if any(x < 0 for x in vals):
        raise ValueError(f"negative entry in clique vector {text!r}")
    return vals


def euler_polynomial(G: Graph, x):
    return sum(vk * x**k for k, vk in enumerate(clique_vector(G)))


def euler_characteristic(G: Graph) -> int:
    return sum((-1) ** k * vk for k, vk in enumerate(clique_vector(G)))


def clique_number(G: Graph) -> int:
    return len(clique_vector(G))


def graph_density(G: Graph) -> Fraction:
    pairs = math.comb(G.n, 2)
    if pairs == 0:
        return Fraction(0)
    return Fraction(G.num_edges, pairs)


def dimension(G: Graph) -> Fraction:
    """Inductive dimension, ``-1`` for the empty graph.

    Every graph met in the recursion is induced on a vertex subset of ``G``
    (spheres of spheres are intersections of neighborhoods), so results are
    memoized on that subset.
    """
    adj = G.adjacency
    memo: dict[frozenset[int], Fraction] = {}

    def dim(S: frozenset[int]) -> Fraction:
        if not S:
            return Fraction(-1)
        hit = memo.get(S)
        if hit is not None:
            return hit
        total = sum((dim(S & adj[x]) for x in S), Fraction(0))
        val = 1 + total / len(S)
        memo[S] = val
        return val

    return dim(frozenset(range(G.n)))


def degree_function(G: Graph) -> StepFunction:
    """Sorted degree sequence viewed as a step function on ``[0, 1]``."""
    return StepFunction(sorted(G.degrees()))


def _sphere_clique_vector(G: Graph, x: int) -> list[int]:
    adj = G.adjacency
    nbrs = adj[x]
    counts = []
    level = [frozenset(w for w in adj[v] & nbrs if w > v) for v in nbrs]
    while level:
        counts.append(len(level))
        level = [frozenset(w for w in cand & adj[v] if w > v) for cand in level for v in cand]
    return counts


def curvature(G: Graph, x: int) -> Fraction:
    """``1 - V0/2 + V1/3 - ...`` with ``V`` the clique vector of the unit sphere of ``x``."""
    if not 0 <= x < G.n:
        raise GraphError(f"vertex {x} out of range for n={G.n}")
    V = _sphere_clique_vector(G, x)
    return 1 + sum((Fraction((-1) ** (k + 1) * vk, k + 2) for k, vk in enumerate(V)), Fraction(0))


def curvatures(G: Graph) -> list[Fraction]:
    return [curvature(G, x) for x in range(G.n)]


def dimension_coloring(G1: Graph) -> list[int]:
    """Color each vertex of a refinement by the dimension of its source simplex."""
    if G1.labels is None:
        raise GraphError("graph carries no simplex labels; build it with barycentric()")
    return [len(lab) - 1 for lab in G1.labels]


def is_proper_coloring(G: Graph, colors: Sequence[int]) -> bool:
    return all(colors[i] != colors[j] for i, j in G.edges)
