"""Finite simple graphs on the vertex set ``0..n-1``.

Graphs are immutable. Vertices are dense integer indices; any provenance a
construction wants to record (for instance which simplex of a parent graph a
refined vertex came from) goes into the optional ``labels`` tuple and never
into vertex identity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "make_graph",
    "complete",
    "cycle",
    "path",
    "wheel",
    "star",
    "cross_polytope",
    "octahedron",
    "icosahedron",
    "erdos_renyi",
    "empty_graph",
    "generator",
    "parse_generator",
    "unit_sphere",
    "induced",
    "edge_distance",
    "disjoint_union",
    "to_text",
    "from_text",
    "to_json",
    "from_json",
    "read_graph",
    "write_graph",
]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid generator parameters."""


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    Build instances with :func:`make_graph` or a generator; the constructor
    trusts that ``edges`` is already sorted, deduplicated and canonical.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple | None = field(default=None, compare=False, repr=False)
    # maps vertex i of this graph to a vertex of the graph it was cut out of
    parent_index: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def neighbors(self, x: int) -> frozenset[int]:
        return self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_empty(self) -> bool:
        return self.n == 0

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def _canonical(edges: Iterable[Sequence[int]], n: int) -> tuple[tuple[int, int], ...]:
    out = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)!r} is not a pair")
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise GraphError(f"self-loop {(i, j)} not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge {(i, j)} out of range for n={n}")
        out.add((i, j) if i < j else (j, i))
    return tuple(sorted(out))


def make_graph(n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence | None = None) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Duplicate and reversed pairs collapse to one edge. A self-loop or an
    endpoint outside ``0..n-1`` raises :class:`GraphError` naming the pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
    return Graph(int(n), _canonical(edges, n), labels)


def empty_graph() -> Graph:
    return Graph(0, ())


# -- generators ---------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path with ``n`` vertices ``0-1-...-(n-1)``."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """Rim cycle ``C_n`` on vertices ``0..n-1`` plus hub ``n``."""
    if n < 3:
        raise GraphError("wheel needs a rim of n >= 3 vertices")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return make_graph(n + 1, rim + [(i, n) for i in range(n)])


def star(n: int) -> Graph:
    """Center ``0`` joined to ``n`` leaves ``1..n``."""
    if n < 0:
        raise GraphError("star needs n >= 0 leaves")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def cross_polytope(d: int) -> Graph:
    """The ``d``-sphere on ``2(d+1)`` vertices; ``i`` and ``i + d + 1`` are antipodes."""
    if d < 0:
        raise GraphError("cross polytope needs d >= 0")
    m = d + 1
    return make_graph(2 * m, [(i, j) for i, j in itertools.combinations(range(2 * m), 2) if j - i != m])


def octahedron() -> Graph:
    return cross_polytope(2)


def icosahedron() -> Graph:
    # north pole 0, upper ring 1..5, lower ring 6..10, south pole 11
    edges = []
    for k in range(5):
        u, u_next = 1 + k, 1 + (k + 1) % 5
        w, w_next = 6 + k, 6 + (k + 1) % 5
        edges += [(0, u), (u, u_next), (u, w), (u, w_next), (w, w_next), (w, 11)]
    return make_graph(12, edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with numpy's PCG64 generator seeded by ``seed``.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order and each
    consumes one uniform double, so a given ``(n, p, seed)`` always yields the
    same edge set.
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"invalid Erdos-Renyi parameters n={n}, p={p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, tuple(e for e, u in zip(pairs, draws) if u < p))


_NAMED = {
    "octahedron": octahedron,
    "icosahedron": icosahedron,
}


def generator(kind: str, *args, **kwargs) -> Graph:
    """Dispatch by name: ``generator("cycle", 5)``, ``generator("erdos_renyi", 10, 0.3, seed=1)``."""
    table = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "wheel": wheel,
        "star": star,
        "cross_polytope": cross_polytope,
        "erdos_renyi": erdos_renyi,
        "octahedron": octahedron,
        "icosahedron": icosahedron,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise GraphError(f"unknown generator {kind!r}") from None
    return fn(*args, **kwargs)


def parse_generator(spec: str) -> Graph:
    """Parse the generator mini-language.

    ``K3`` complete, ``C12`` cycle, ``P4`` path, ``W6`` wheel, ``S3`` star,
    ``cross:d=4`` cross polytope, ``ER:n=10,p=0.4,seed=7`` Erdos-Renyi, and
    the names ``octahedron`` / ``icosahedron``.
    """
    s = spec.strip()
    if s.lower() in _NAMED:
        return _NAMED[s.lower()]()
    if ":" in s:
        head, _, rest = s.partition(":")
        params = {}
        for item in filter(None, rest.split(",")):
            key, eq, val = item.partition("=")
            if not eq:
                raise GraphError(f"bad parameter {item!r} in {spec!r}")
            params[key.strip()] = val.strip()
        head = head.strip().lower()
        try:
            if head == "er":
                return erdos_renyi(int(params["n"]), float(params["p"]), int(params.get("seed", 0)))
            if head == "cross":
                return cross_polytope(int(params["d"]))
        except KeyError as exc:
            raise GraphError(f"missing parameter {exc} in {spec!r}") from None
        raise GraphError(f"unknown generator {spec!r}")
    prefixes = {"K": complete, "C": cycle, "P": path, "W": wheel, "S": star}
    if len(s) >= 2 and s[0] in prefixes and s[1:].isdigit():
        return prefixes[s[0]](int(s[1:]))
    raise GraphError(f"unknown generator {spec!r}")


# -- subgraphs and comparisons ------------------------------------------------


def induced(G: Graph, S: Iterable[int]) -> Graph:
    """Induced subgraph on ``S``, re-indexed in increasing order.

    ``parent_index`` of the result maps each new vertex back to ``G``.
    """
    verts = sorted(set(S))
    if verts and not (0 <= verts[0] and verts[-1] < G.n):
        raise GraphError(f"vertex set {verts} out of range for n={G.n}")
    pos = {v: k for k, v in enumerate(verts)}
    adj = G.adjacency
    edges = []
    for v in verts:
        a = pos[v]
        for w in adj[v]:
            b = pos.get(w)
            if b is not None and a < b:
                edges.append((a, b))
    edges.sort()
    labels = tuple(G.labels[v] for v in verts) if G.labels is not None else None
    return Graph(len(verts), tuple(edges), labels, tuple(verts))


def unit_sphere(G: Graph, x: int) -> Graph:
    """Subgraph generated by the neighbors of ``x``."""
    if not 0 <= x < G.n:
        raise GraphError(f"vertex {x} out of range for n={G.n}")
    return induced(G, G.adjacency[x])


def edge_distance(G: Graph, H: Graph) -> int:
    """Size of the edge symmetric difference of two graphs on one vertex set."""
    if G.n != H.n:
        raise GraphError(f"vertex counts differ: {G.n} vs {H.n}")
    return len(G.edge_set ^ H.edge_set)


def disjoint_union(G: Graph, k: int) -> Graph:
    if k < 0:
        raise GraphError("number of copies must be nonnegative")
    edges = [(i + c * G.n, j + c * G.n) for c in range(k) for i, j in G.edges]
    return Graph(G.n * k, tuple(edges))


# -- serialization ------------------------------------------------------------


def to_text(G: Graph, with_labels: bool = False) -> str:
    """Plain text: first line ``n``, then one ``i j`` line per edge.

    With ``with_labels`` each label that is a tuple of integers is written as
    a ``#@ i a b c`` comment line, which generic readers skip.
    """
    lines = [str(G.n)]
    lines += [f"{i} {j}" for i, j in G.edges]
    if with_labels and G.labels is not None:
        for i, lab in enumerate(G.labels):
            lines.append("#@ " + " ".join(str(v) for v in (i, *lab)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    n = None
    edges = []
    labels: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.startswith("#@"):
            parts = raw[2:].split()
            labels[int(parts[0])] = tuple(int(v) for v in parts[1:])
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if n is None:
                if len(parts) != 1:
                    raise GraphError(f"line {lineno}: expected vertex count, got {raw!r}")
                n = int(parts[0])
            else:
                if len(parts) != 2:
                    raise GraphError(f"line {lineno}: expected 'i j', got {raw!r}")
                edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: not an integer in {raw!r}") from None
    if n is None:
        raise GraphError("missing vertex count line")
    G = make_graph(n, edges)
    if labels:
        if len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
        G = Graph(G.n, G.edges, tuple(labels[i] for i in range(n)))
    return G


def to_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]})


def from_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        return make_graph(int(data["n"]), data["edges"])
    except KeyError as exc:
        raise GraphError(f"JSON graph is missing {exc}") from None


def read_graph(path) -> Graph:
    text = open(path, encoding="utf-8").read()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_text(text)


def write_graph(G: Graph, path, fmt: str = "text", with_labels: bool = False) -> None:
    payload = to_json(G) + "\n" if fmt == "json" else to_text(G, with_labels=with_labels)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)

