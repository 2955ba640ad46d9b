"""Barycentric refinement of finite simple graphs.

Clique complexes, the integer operator on clique vectors, Laplacian-family
spectra and their step functions, and recursive sphere/ball recognition.
"""

from .complex import (
    clique_number,
    clique_vector,
    curvature,
    dimension,
    dimension_coloring,
    enumerate_cliques,
    euler_characteristic,
    euler_polynomial,
    graph_density,
)
from .graphs import Graph, GraphError, make_graph, parse_generator
from .operator import barycentric_operator, invariant, left_eigenvectors, predict_clique_vector
from .refine import SizeLimitError, barycentric, boundary, graph_product, refine_iter
from .spectra import eigenvalues, kirchhoff, spectral_function
from .stepfunc import StepFunction, l1_distance
from .topology import classify, is_contractible, is_sphere

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "SizeLimitError",
    "StepFunction",
    "barycentric",
    "barycentric_operator",
    "boundary",
    "classify",
    "clique_number",
    "clique_vector",
    "curvature",
    "dimension",
    "dimension_coloring",
    "eigenvalues",
    "enumerate_cliques",
    "euler_characteristic",
    "euler_polynomial",
    "graph_density",
    "graph_product",
    "invariant",
    "is_contractible",
    "is_sphere",
    "kirchhoff",
    "l1_distance",
    "left_eigenvectors",
    "make_graph",
    "parse_generator",
    "predict_clique_vector",
    "refine_iter",
    "spectral_function",
]
