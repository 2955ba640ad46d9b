import pytest

from baryspec.complex import euler_characteristic
from baryspec.graphs import (
    complete,
    cross_polytope,
    cycle,
    disjoint_union,
    icosahedron,
    induced,
    octahedron,
    path,
    star,
    unit_sphere,
    wheel,
)
from baryspec.refine import barycentric
from baryspec.topology import Verdict, boundary_vertices, classify, is_contractible, is_sphere
from corpus import is_cycle_graph


@pytest.mark.parametrize(
    "G,expected",
    [
        (octahedron(), "2-graph"),
        (icosahedron(), "2-graph"),
        (barycentric(complete(3)), "2-ball"),
        (barycentric(complete(4)), "3-ball"),
        (complete(3), "none"),
        (complete(4), "none"),
        (cycle(5), "1-graph"),
        (path(4), "1-ball"),
        (wheel(6), "2-ball"),
        (barycentric(octahedron()), "2-graph"),
        (barycentric(icosahedron()), "2-graph"),
        (complete(1), "0-graph"),
        (star(3), "none"),
    ],
    ids=["oct", "ico", "bK3", "bK4", "K3", "K4", "C5", "P4", "W6", "bOct", "bIco", "K1", "S3"],
)
def test_classify(G, expected):
    c = classify(G)
    assert c.status == "yes"
    assert str(c) == expected


def test_refined_triangle_boundary_is_hexagon():
    G = barycentric(complete(3))
    c = classify(G)
    assert c.boundary == [0, 1, 2, 3, 4, 5]
    B = induced(G, c.boundary)
    assert is_cycle_graph(B) and B.n == 6
    assert euler_characteristic(B) == 0


@pytest.mark.parametrize("n", range(4, 9))
def test_cycles_are_one_spheres(n):
    G = cycle(n)
    v = is_sphere(G, 1)
    assert v and v.conclusive
    assert euler_characteristic(G) == 0
    assert str(classify(G)) == "1-graph"


@pytest.mark.parametrize(
    "G,d", [(octahedron(), 2), (icosahedron(), 2), (cross_polytope(3), 3), (disjoint_union(complete(1), 2), 0)]
)
def test_spheres(G, d):
    assert is_sphere(G, d)
    assert euler_characteristic(G) == 1 + (-1) ** d


def test_not_spheres():
    assert not is_sphere(octahedron(), 1)
    assert not is_sphere(path(4), 1)
    assert not is_sphere(complete(3), 2)
    assert not is_sphere(disjoint_union(cycle(4), 2), 1)


def test_two_graph_unit_spheres_are_circles():
    for G in (octahedron(), icosahedron()):
        for x in range(G.n):
            S = unit_sphere(G, x)
            assert is_sphere(S, 1) and euler_characteristic(S) == 0


@pytest.mark.parametrize("G", [complete(1), complete(4), path(5), star(4), wheel(6), barycentric(complete(3))])
def test_contractible(G):
    v = is_contractible(G)
    assert v and euler_characteristic(G) == 1
    assert sorted(v.witness) == list(range(G.n))


@pytest.mark.parametrize("G", [cycle(5), octahedron(), disjoint_union(complete(2), 2)])
def test_not_contractible(G):
    v = is_contractible(G)
    assert v.status == "no" and not v


def test_budget_exhaustion_is_inconclusive():
    v = is_contractible(barycentric(complete(4)), budget=3)
    assert v.status == "inconclusive" and not v.conclusive
    c = classify(barycentric(icosahedron()), budget=3)
    assert str(c) == "inconclusive"
    assert isinstance(is_sphere(icosahedron(), 2, budget=2), Verdict)


@pytest.mark.parametrize("G", [cycle(5), octahedron(), wheel(6), path(3)], ids=["C5", "oct", "W6", "P3"])
def test_classification_survives_refinement(G):
    assert str(classify(barycentric(G))) == str(classify(G))


def test_boundary_vertices():
    verts, undecided = boundary_vertices(barycentric(complete(3)))
    assert verts == [0, 1, 2, 3, 4, 5] and undecided == []
    verts, undecided = boundary_vertices(wheel(6))
    assert verts == [0, 1, 2, 3, 4, 5] and undecided == []


@pytest.mark.parametrize("G,d", [(octahedron(), 2), (icosahedron(), 2), (cross_polytope(3), 3), (cycle(6), 1)])
def test_spheres_also_satisfy_every_vertex_reading(G, d):
    assert is_sphere(G, d)
    for x in range(G.n):
        assert is_contractible(induced(G, [y for y in range(G.n) if y != x]))
