"""Barycentric refinement, iterated refinement with an on-disk cache, graph products
and boundary extraction."""

from __future__ import annotations

import hashlib
import itertools
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from filelock import FileLock

from .complex import clique_vector, euler_characteristic, whitney_complex
from .graphs import Graph, GraphError, from_text, induced, to_text
from .operator import predict_clique_vector, predict_vertex_count

__all__ = [
    "SizeLimitError",
    "DEFAULT_SIZE_LIMIT",
    "CACHE_ENV",
    "barycentric",
    "refine_iter",
    "refinement_sequence",
    "graph_product",
    "Boundary",
    "boundary",
    "graph_hash",
]

log = logging.getLogger(__name__)

DEFAULT_SIZE_LIMIT = 200_000
CACHE_ENV = "BARYSPEC_CACHE"


class SizeLimitError(RuntimeError):
    """A requested refinement would exceed the vertex-count limit."""

    def __init__(self, predicted: int, limit: int, m: int):
        self.predicted = predicted
        self.limit = limit
        self.m = m
        super().__init__(f"refinement depth {m} would produce {predicted} vertices (limit {limit})")


def _faces(s: tuple[int, ...]):
    for r in range(1, len(s)):
        yield from itertools.combinations(s, r)


def barycentric(G: Graph) -> Graph:
    """Graph of all simplices of ``G``, joined when one strictly contains the other.

    Vertices are ordered by (dimension, lexicographic support) and ``labels[i]``
    is the simplex of ``G`` that vertex ``i`` stands for.
    """
    if G.n == 0:
        raise GraphError("cannot refine the empty graph")
    simplices = [s for level in whitney_complex(G) for s in level]
    index = {s: i for i, s in enumerate(simplices)}
    edges = []
    for j, s in enumerate(simplices):
        for t in _faces(s):
            edges.append((index[t], j))
    edges.sort()
    return Graph(len(simplices), tuple(edges), tuple(simplices))


def graph_hash(G: Graph) -> str:
    return hashlib.sha256(to_text(G).encode()).hexdigest()


def _cache_dir(cache) -> Path | None:
    if cache is None:
        cache = os.environ.get(CACHE_ENV)
    if not cache:
        return None
    p = Path(cache)
    p.mkdir(parents=True, exist_ok=True)
    return p


def refine_iter(G: Graph, m: int, cache=None, limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    """The ``m``-th refinement ``G_m``.

    The vertex count is predicted from the clique vector before anything is
    built; beyond ``limit`` a :class:`SizeLimitError` is raised. When a cache
    directory is given (or set via ``BARYSPEC_CACHE``) each ``G_k`` is stored
    as ``<sha256 of G's text form>.<k>.graph``.
    """
    if m < 0:
        raise ValueError("refinement depth must be >= 0")
    if m == 0:
        return G
    predicted = predict_vertex_count(clique_vector(G), m)
    if predicted > limit:
        raise SizeLimitError(predicted, limit, m)
    root = _cache_dir(cache)
    key = graph_hash(G) if root is not None else None

    def path_for(k: int) -> Path:
        return root / f"{key}.{k}.graph"

    start, cur = 0, G
    if root is not None:
        for k in range(m, 0, -1):
            p = path_for(k)
            if p.exists():
                with FileLock(str(p) + ".lock"):
                    cur = from_text(p.read_text(encoding="utf-8"))
                start = k
                log.debug("cache hit %s", p.name)
                break
    for k in range(start + 1, m + 1):
        cur = barycentric(cur)
        if root is not None:
            p = path_for(k)
            with FileLock(str(p) + ".lock"):
                tmp = p.with_suffix(".tmp")
                tmp.write_text(to_text(cur, with_labels=True), encoding="utf-8")
                tmp.replace(p)
    return cur


def refinement_sequence(G: Graph, m: int, cache=None, limit: int = DEFAULT_SIZE_LIMIT) -> list[Graph]:
    """``[G_0, G_1, ..., G_m]``."""
    predicted = predict_vertex_count(clique_vector(G), m)
    if predicted > limit:
        raise SizeLimitError(predicted, limit, m)
    seq = [G]
    for k in range(1, m + 1):
        seq.append(refine_iter(G, k, cache=cache, limit=limit) if cache else barycentric(seq[-1]))
    return seq


def graph_product(G: Graph, H: Graph) -> Graph:
    """Vertices are pairs ``(x, y)`` of simplices of ``G`` and ``H``.

    Distinct pairs ``(x, y)``, ``(u, v)`` are adjacent when ``x <= u`` and
    ``y <= v`` (or the other way round) as vertex sets. With ``H = K1`` this
    reproduces :func:`barycentric` vertex for vertex.
    """
    if G.n == 0 or H.n == 0:
        raise GraphError("graph product needs two nonempty factors")
    SG = [s for level in whitney_complex(G) for s in level]
    SH = [s for level in whitney_complex(H) for s in level]
    pairs = [(x, y) for x in SG for y in SH]
    index = {p: i for i, p in enumerate(pairs)}
    edges = set()
    for j, (u, v) in enumerate(pairs):
        for x in itertools.chain(_faces(u), [u]):
            for y in itertools.chain(_faces(v), [v]):
                i = index[(x, y)]
                if i != j:
                    edges.add((i, j) if i < j else (j, i))
    return Graph(len(pairs), tuple(sorted(edges)), tuple(pairs))


@dataclass
class Boundary:
    graph: Graph
    vertices: list[int]
    conclusive: bool = True
    undecided: list[int] | None = None


def boundary(G: Graph, mode: str = "euler", budget: int = 10**6) -> Boundary:
    """Subgraph generated by the vertices whose unit sphere is not a sphere.

    ``mode="euler"`` selects vertices whose unit sphere has Euler
    characteristic 1, the criterion for refinements of a simplex.
    ``mode="exact"`` runs sphere recognition on every unit sphere; vertices it
    cannot decide within ``budget`` are left out and reported in ``undecided``.
    """
    if mode == "euler":
        adj = G.adjacency
        verts = [x for x in range(G.n) if euler_characteristic(induced(G, adj[x])) == 1]
        return Boundary(induced(G, verts), verts)
    if mode == "exact":
        from .topology import boundary_vertices

        verts, undecided = boundary_vertices(G, budget)
        return Boundary(induced(G, verts), verts, not undecided, undecided)
    raise ValueError(f"unknown boundary mode {mode!r}")


def predicted_clique_vector(G: Graph, m: int) -> tuple[int, ...]:
    return predict_clique_vector(clique_vector(G), m)
