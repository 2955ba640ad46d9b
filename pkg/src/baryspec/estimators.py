"""scikit-learn style wrappers so refinement and spectra compose with pipelines."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .complex import clique_vector
from .graphs import Graph, GraphError, make_graph
from .operator import predict_clique_vector
from .refine import DEFAULT_SIZE_LIMIT, refine_iter
from .spectra import adjacency, dirac, eigenvalues, hodge_laplacian, kirchhoff, normalized_laplacian, spectral_function
from .stepfunc import l1_distance

__all__ = [
    "check_graph",
    "check_graphs",
    "BarycentricRefiner",
    "CliqueVectorTransformer",
    "SpectralFunctionEstimator",
    "OPERATORS",
]

OPERATORS = {
    "kirchhoff": kirchhoff,
    "adjacency": adjacency,
    "normalized": normalized_laplacian,
    "hodge": hodge_laplacian,
    "dirac": dirac,
}


def check_graph(G) -> Graph:
    """Coerce a graph-like input into a :class:`Graph`.

    Accepts a :class:`Graph`, an ``(n, edges)`` pair, a square symmetric 0/1
    adjacency matrix, or any object with ``number_of_nodes()`` and ``edges()``
    whose nodes are ``0..n-1`` (a networkx graph, for instance).
    """
    if isinstance(G, Graph):
        return G
    if hasattr(G, "number_of_nodes") and hasattr(G, "edges"):
        return make_graph(G.number_of_nodes(), list(G.edges()))
    if isinstance(G, tuple) and len(G) == 2 and np.isscalar(G[0]):
        return make_graph(int(G[0]), G[1])
    A = np.asarray(G)
    if A.ndim == 2 and A.shape[0] == A.shape[1]:
        if not np.array_equal(A, A.T) or np.any(np.diag(A)) or not np.isin(A, (0, 1)).all():
            raise GraphError("adjacency matrix must be symmetric 0/1 with zero diagonal")
        i, j = np.nonzero(np.triu(A, 1))
        return make_graph(A.shape[0], zip(i.tolist(), j.tolist()))
    raise GraphError(f"cannot interpret {type(G).__name__} as a graph")


def check_graphs(X) -> list[Graph]:
    if isinstance(X, (Graph, tuple)) or (isinstance(X, np.ndarray) and X.ndim == 2):
        raise GraphError("expected a sequence of graphs")
    return [check_graph(G) for G in X]


class BarycentricRefiner(TransformerMixin, BaseEstimator):
    """Map each graph to its ``m``-th refinement."""

    def __init__(self, m: int = 1, limit: int = DEFAULT_SIZE_LIMIT, cache=None):
        self.m = m
        self.limit = limit
        self.cache = cache

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_graphs_seen_ = len(X)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_graphs_seen_")
        return [refine_iter(G, self.m, cache=self.cache, limit=self.limit) for G in check_graphs(X)]


class CliqueVectorTransformer(TransformerMixin, BaseEstimator):
    """Feature matrix of clique vectors, optionally pushed ``refinements`` steps forward.

    Refined clique vectors come from the integer operator, not from building
    the refined graphs, so large depths are cheap. Rows are zero-padded to the
    largest clique number seen in ``fit`` (or ``n_features`` when given).
    """

    def __init__(self, refinements: int = 0, n_features: int | None = None):
        self.refinements = refinements
        self.n_features = n_features

    def fit(self, X, y=None):
        graphs = check_graphs(X)
        width = max((len(clique_vector(G)) for G in graphs), default=0)
        self.n_features_out_ = self.n_features if self.n_features is not None else width
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        rows = []
        for G in check_graphs(X):
            v = predict_clique_vector(clique_vector(G), self.refinements)
            if len(v) > self.n_features_out_:
                raise GraphError(f"clique vector of length {len(v)} exceeds fitted width {self.n_features_out_}")
            rows.append(list(v) + [0] * (self.n_features_out_ - len(v)))
        big = any(abs(x) > np.iinfo(np.int64).max for r in rows for x in r)
        return np.array(rows, dtype=object if big else np.int64).reshape(len(rows), self.n_features_out_)


class SpectralFunctionEstimator(BaseEstimator):
    """Fit on one graph: refine it, diagonalize an operator, keep the spectral function.

    ``transform``/``predict`` evaluate the fitted step function at points of
    ``[0, 1]``.
    """

    def __init__(self, refinements: int = 0, operator: str = "kirchhoff", tol: float | None = None,
                 limit: int = DEFAULT_SIZE_LIMIT):
        self.refinements = refinements
        self.operator = operator
        self.tol = tol
        self.limit = limit

    def fit(self, G, y=None):
        if self.operator not in OPERATORS:
            raise ValueError(f"unknown operator {self.operator!r}; choose from {sorted(OPERATORS)}")
        graph = refine_iter(check_graph(G), self.refinements, limit=self.limit)
        self.graph_ = graph
        self.spectrum_ = eigenvalues(OPERATORS[self.operator](graph), tol=self.tol)
        self.spectral_function_ = spectral_function(self.spectrum_)
        self.n_vertices_ = graph.n
        return self

    def transform(self, X):
        check_is_fitted(self, "spectral_function_")
        x = check_array(np.asarray(X, dtype=float).reshape(-1, 1), ensure_all_finite=True)
        return self.spectral_function_.sample(x.ravel())

    predict = transform

    def l1_distance(self, other) -> float:
        """L1 distance to another fitted estimator, a step function or a callable."""
        check_is_fitted(self, "spectral_function_")
        if isinstance(other, SpectralFunctionEstimator):
            other = other.spectral_function_
        return l1_distance(self.spectral_function_, other)
