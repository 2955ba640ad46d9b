"""Recursive recognition of contractible graphs, spheres, d-graphs and balls.

Every graph visited by the recursion (unit spheres, punctured graphs, spheres
of spheres) is induced on a vertex subset of the input, so the search works
on frozensets of host vertices and memoizes on them exactly. A shared node
budget bounds the total work; running out turns the answer into
``inconclusive`` rather than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph

__all__ = [
    "Verdict",
    "Classification",
    "TopologyCheckError",
    "is_contractible",
    "is_sphere",
    "classify",
    "boundary_vertices",
]

YES, NO, INCONCLUSIVE = "yes", "no", "inconclusive"


class TopologyCheckError(AssertionError):
    """A positive verdict contradicted its Euler characteristic."""


class _Exhausted(Exception):
    pass


@dataclass
class Verdict:
    status: str
    witness: list[int] | None = None
    budget_spent: int = 0

    def __bool__(self) -> bool:
        return self.status == YES

    @property
    def conclusive(self) -> bool:
        return self.status != INCONCLUSIVE


@dataclass
class Classification:
    kind: str  # "d-graph", "ball", "d-graph-with-boundary", "none"
    dim: int | None
    status: str
    budget_spent: int = 0
    boundary: list[int] = field(default_factory=list)

    def __str__(self) -> str:
        if self.status == INCONCLUSIVE:
            return "inconclusive"
        if self.kind == "none":
            return "none"
        if self.kind == "ball":
            return f"{self.dim}-ball"
        if self.kind == "d-graph":
            return f"{self.dim}-graph"
        return f"{self.dim}-graph with boundary"


class _Search:
    def __init__(self, G: Graph, budget: int):
        if budget <= 0:
            raise ValueError("budget must be positive")
        self.adj = G.adjacency
        self.upper = [frozenset(w for w in a if w > v) for v, a in enumerate(self.adj)]
        self.budget = budget
        self.spent = 0
        self.memo: dict[tuple, object] = {}

    def tick(self) -> None:
        self.spent += 1
        if self.spent > self.budget:
            raise _Exhausted

    # -- cheap necessary conditions -------------------------------------

    def euler(self, S: frozenset[int]) -> int:
        key = ("chi", S)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        up = self.upper
        chi, sign = 0, 1
        level = [up[v] & S for v in S]
        while level:
            chi += sign * len(level)
            sign = -sign
            level = [cand & up[v] for cand in level for v in cand]
        self.memo[key] = chi
        return chi

    def connected(self, S: frozenset[int]) -> bool:
        if not S:
            return False
        start = min(S)
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in self.adj[x] & S:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(S)

    def is_clique(self, S: frozenset[int]) -> bool:
        return all(len(self.adj[x] & S) == len(S) - 1 for x in S)

    def top_dim(self, S: frozenset[int]) -> int:
        up = self.upper
        d = -1
        level = [up[v] & S for v in S]
        while level:
            d += 1
            level = [cand & up[v] for cand in level for v in cand]
        return d

    # -- recursive predicates -------------------------------------------

    def contractible(self, S: frozenset[int]) -> list[int] | None:
        """Collapse order witnessing contractibility, or ``None``."""
        key = ("c", S)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        if len(S) <= 1:
            result = [min(S)] if S else None
        elif self.is_clique(S):
            result = sorted(S)
        elif not self.connected(S) or self.euler(S) != 1:
            result = None
        else:
            result = None
            adj = self.adj
            # vertices with a cone-shaped (complete) sphere are tried first
            order = sorted(S, key=lambda x: (not self.is_clique(adj[x] & S), len(adj[x] & S), x))
            for x in order:
                if self.contractible(adj[x] & S) is None:
                    continue
                rest = self.contractible(S - {x})
                if rest is not None:
                    result = [x, *rest]
                    break
        self.memo[key] = result
        return result

    def sphere(self, S: frozenset[int], d: int) -> int | None:
        """A vertex whose removal leaves ``S`` contractible when ``S`` is a ``d``-sphere, else ``None``.

        The empty graph is the ``(-1)``-sphere and returns ``-1``.
        """
        key = ("s", S, d)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        result = None
        if d == -1:
            result = -1 if not S else None
        elif S and self.euler(S) == 1 + (-1) ** d:
            adj = self.adj
            if all(self.sphere(adj[x] & S, d - 1) is not None for x in sorted(S)):
                for x in sorted(S):
                    if self.contractible(S - {x}) is not None:
                        result = x
                        break
        self.memo[key] = result
        return result

    def any_sphere(self, S: frozenset[int]) -> bool:
        return self.sphere(S, self.top_dim(S)) is not None

    def d_graph(self, S: frozenset[int], d: int) -> bool:
        key = ("g", S, d)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        adj = self.adj
        result = bool(S) and d >= 0 and all(self.sphere(adj[x] & S, d - 1) is not None for x in sorted(S))
        self.memo[key] = result
        return result

    def with_boundary(self, S: frozenset[int], d: int) -> frozenset[int] | None:
        """Boundary vertex set when ``S`` is a ``d``-graph with nonempty boundary, else ``None``.

        Every unit sphere must be a ``(d-1)``-sphere or ``(d-1)``-ball and the
        vertices with ball spheres must generate a ``(d-1)``-graph.
        """
        key = ("b", S, d)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        result = None
        if S and d >= 1:
            adj = self.adj
            bnd = set()
            ok = True
            for x in sorted(S):
                sph = adj[x] & S
                if self.sphere(sph, d - 1) is not None:
                    continue
                if self.ball(sph, d - 1):
                    bnd.add(x)
                    continue
                ok = False
                break
            if ok and bnd and self.d_graph(frozenset(bnd), d - 1):
                result = frozenset(bnd)
        self.memo[key] = result
        return result

    def ball(self, S: frozenset[int], d: int) -> bool:
        key = ("B", S, d)
        if key in self.memo:
            return self.memo[key]
        self.tick()
        if d == 0:
            result = len(S) == 1
        elif d < 0:
            result = False
        else:
            bnd = self.with_boundary(S, d)
            result = bnd is not None and self.sphere(bnd, d - 1) is not None
        self.memo[key] = result
        return result


def is_contractible(G: Graph, budget: int = 10**6) -> Verdict:
    """Exhaustive search for a collapse order down to a single vertex."""
    search = _Search(G, budget)
    try:
        witness = search.contractible(frozenset(range(G.n)))
    except _Exhausted:
        return Verdict(INCONCLUSIVE, None, search.spent)
    if witness is None:
        return Verdict(NO, None, search.spent)
    chi = search.euler(frozenset(range(G.n)))
    if chi != 1:
        raise TopologyCheckError(f"contractible verdict but Euler characteristic {chi}")
    return Verdict(YES, witness, search.spent)


def is_sphere(G: Graph, d: int, budget: int = 10**6) -> Verdict:
    """Is ``G`` a ``d``-sphere? A yes carries the puncture vertex as witness."""
    search = _Search(G, budget)
    try:
        x = search.sphere(frozenset(range(G.n)), d)
    except _Exhausted:
        return Verdict(INCONCLUSIVE, None, search.spent)
    if x is None:
        return Verdict(NO, None, search.spent)
    chi = search.euler(frozenset(range(G.n)))
    if chi != 1 + (-1) ** d:
        raise TopologyCheckError(f"{d}-sphere verdict but Euler characteristic {chi}")
    return Verdict(YES, [] if x < 0 else [x], search.spent)


def classify(G: Graph, budget: int = 10**6) -> Classification:
    """Classify as ``d``-graph, ``d``-ball, ``d``-graph with boundary, or none.

    ``d`` is the top simplex dimension of ``G``.
    """
    search = _Search(G, budget)
    S = frozenset(range(G.n))
    try:
        if not S:
            return Classification("none", None, YES, search.spent)
        d = search.top_dim(S)
        if search.d_graph(S, d):
            return Classification("d-graph", d, YES, search.spent)
        if d == 0:
            kind = "ball" if search.ball(S, 0) else "none"
            return Classification(kind, 0 if kind == "ball" else None, YES, search.spent)
        bnd = search.with_boundary(S, d)
        if bnd is None:
            return Classification("none", None, YES, search.spent)
        if search.sphere(bnd, d - 1) is not None:
            chi = search.euler(bnd)
            if chi != 1 + (-1) ** (d - 1):
                raise TopologyCheckError(f"boundary sphere with Euler characteristic {chi}")
            return Classification("ball", d, YES, search.spent, sorted(bnd))
        return Classification("d-graph-with-boundary", d, YES, search.spent, sorted(bnd))
    except _Exhausted:
        return Classification("none", None, INCONCLUSIVE, search.spent)


def boundary_vertices(G: Graph, budget: int = 10**6) -> tuple[list[int], list[int]]:
    """Vertices whose unit sphere is not a sphere, plus those left undecided by the budget."""
    search = _Search(G, budget)
    out, undecided = [], []
    for x in range(G.n):
        if undecided:
            undecided.append(x)
            continue
        try:
            if not search.any_sphere(G.adjacency[x]):
                out.append(x)
        except _Exhausted:
            undecided.append(x)
    return out, undecided

