"""Shared fixture graphs and brute-force oracles.

The oracles deliberately avoid the library's clique enumeration and memoized
recursions: they test every vertex subset, rebuild induced subgraphs from
scratch, and compare containment pair by pair.
"""

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from baryspec.graphs import (
    complete,
    cross_polytope,
    cycle,
    erdos_renyi,
    icosahedron,
    make_graph,
    octahedron,
    path,
    star,
    wheel,
)

PROBABILITIES = (0.3, 0.5, 0.7)


def random_graphs(count=25):
    out = []
    for seed in range(count):
        n = 5 + seed % 6
        p = PROBABILITIES[seed % 3]
        out.append((f"ER(n={n},p={p},seed={seed})", erdos_renyi(n, p, seed)))
    return out


def fixture_graphs():
    named = [(f"K{n}", complete(n)) for n in range(2, 6)]
    named += [(f"C{n}", cycle(n)) for n in range(4, 9)]
    named += [("octahedron", octahedron()), ("icosahedron", icosahedron()), ("W6", wheel(6))]
    return named


def small_graphs():
    return [("K1", complete(1)), ("P4", path(4)), ("S3", star(3)), ("cross3", cross_polytope(3))]


def corpus():
    return fixture_graphs() + small_graphs() + random_graphs()


# -- strategies --------------------------------------------------------------


@st.composite
def graphs(draw, n=None, max_n=8):
    n = draw(st.integers(1, max_n)) if n is None else n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


# -- oracles ----------------------------------------------------------------


def brute_cliques(G, k):
    return [
        s for s in itertools.combinations(range(G.n), k)
        if all(G.has_edge(i, j) for i, j in itertools.combinations(s, 2))
    ]


def brute_clique_vector(G):
    v = []
    for k in range(1, G.n + 1):
        c = len(brute_cliques(G, k))
        if c == 0:
            break
        v.append(c)
    return tuple(v)


def brute_refinement(G):
    simplices = [s for k in range(1, G.n + 1) for s in brute_cliques(G, k)]
    edges = [
        (i, j) for i, j in itertools.combinations(range(len(simplices)), 2)
        if set(simplices[i]) < set(simplices[j]) or set(simplices[j]) < set(simplices[i])
    ]
    return make_graph(len(simplices), edges), simplices


def brute_induced(G, S):
    S = sorted(S)
    return make_graph(len(S), [
        (a, b) for a, b in itertools.combinations(range(len(S)), 2) if G.has_edge(S[a], S[b])
    ])


def brute_dimension(G):
    if G.n == 0:
        return Fraction(-1)
    total = sum((brute_dimension(brute_induced(G, G.neighbors(x))) for x in range(G.n)), Fraction(0))
    return 1 + total / G.n


def brute_euler(G):
    return sum((-1) ** k * c for k, c in enumerate(brute_clique_vector(G)))


def brute_curvature(G, x):
    V = brute_clique_vector(brute_induced(G, G.neighbors(x)))
    return Fraction(1) + sum(Fraction((-1) ** (k + 1) * c, k + 2) for k, c in enumerate(V))


def is_cycle_graph(G):
    return G.n >= 3 and G.is_connected() and all(d == 2 for d in G.degrees())
