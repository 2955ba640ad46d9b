"""The integer operator taking the clique vector of a graph to that of its refinement.

All arithmetic is on Python integers and :class:`~fractions.Fraction`, so
powers of the operator and its left eigenvectors are exact at any size.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

__all__ = [
    "BaryMatrix",
    "Eigenvector",
    "barycentric_operator",
    "left_eigenvectors",
    "invariant",
    "predict_clique_vector",
    "predict_vertex_count",
    "growth_rate_check",
    "GrowthReport",
]


@dataclass(frozen=True)
class BaryMatrix:
    """Square upper-triangular integer matrix, rows stored as tuples."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[k][k] for k in range(self.N))

    def leading(self, k: int) -> BaryMatrix:
        return BaryMatrix(tuple(r[:k] for r in self.rows[:k]))

    def matvec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.N:
            raise ValueError(f"vector of length {len(v)} for a {self.N}x{self.N} matrix")
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.rows)

    def rmatvec(self, f: Sequence) -> tuple:
        """``A^T f``."""
        return tuple(sum(self.rows[i][j] * f[i] for i in range(self.N)) for j in range(self.N))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self) -> str:
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.tolist())


def barycentric_operator(N: int) -> BaryMatrix:
    """Build the ``N x N`` operator column by column.

    Given the ``k x k`` prefix, applying it to ``(C(k+1,1), ..., C(k+1,k))``
    (the clique vector of the boundary of a ``k``-simplex) yields the clique
    vector ``c`` of the boundary sphere of the refined simplex. The next
    column is ``(1, c_1, ..., c_{k-1}, (k+1)!)``: one central vertex, interior
    faces counted by the boundary faces one dimension up, and ``(k+1)!`` top
    simplices.
    """
    if N < 1:
        raise ValueError(f"truncation order must be >= 1, got {N}")
    cols: list[list[int]] = [[1]]
    for k in range(1, N):
        A = BaryMatrix(tuple(tuple(cols[j][i] for j in range(k)) for i in range(k)))
        c = A.matvec([math.comb(k + 1, i) for i in range(1, k + 1)])
        for col in cols:
            col.append(0)
        cols.append([1, *c[:-1], math.factorial(k + 1)])
    return BaryMatrix(tuple(tuple(cols[j][i] for j in range(N)) for i in range(N)))


@dataclass(frozen=True)
class Eigenvector:
    eigenvalue: int
    vector: tuple[int, ...]

    def __iter__(self):
        return iter(self.vector)


def _primitive(vals: Sequence[Fraction], sign: str) -> tuple[int, ...]:
    denom = reduce(math.lcm, (v.denominator for v in vals), 1)
    ints = [int(v * denom) for v in vals]
    g = reduce(math.gcd, ints, 0) or 1
    ints = [x // g for x in ints]
    nonzero = [x for x in ints if x]
    pivot = nonzero[0] if sign == "first" else nonzero[-1]
    if pivot < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def left_eigenvectors(A: BaryMatrix, sign: str = "printed") -> list[Eigenvector]:
    """Eigenvectors of ``A^T`` for each diagonal eigenvalue ``k!``, in primitive integer form.

    ``A^T`` is lower triangular, so for the eigenvalue at index ``k`` the
    entries before ``k`` vanish, entry ``k`` is 1, and the rest follow by
    forward substitution. ``sign="last"`` makes the last nonzero entry
    positive, ``"first"`` the first one. ``"printed"`` starts the Euler vector
    (eigenvalue 1) with ``+1`` and makes the last entry positive otherwise,
    the convention of the published tables.
    """
    if sign not in ("first", "last", "printed"):
        raise ValueError("sign must be 'first', 'last' or 'printed'")
    N = A.N
    diag = A.diagonal()
    if len(set(diag)) != N:
        raise ValueError("repeated eigenvalues; eigenvectors are not unique up to scale")
    out = []
    for k in range(N):
        lam = diag[k]
        f = [Fraction(0)] * N
        f[k] = Fraction(1)
        for j in range(k + 1, N):
            s = sum((A[i, j] * f[i] for i in range(k, j)), Fraction(0))
            f[j] = -s / (diag[j] - lam)
        rule = sign if sign != "printed" else ("first" if lam == 1 else "last")
        vec = _primitive(f, rule)
        if A.rmatvec(vec) != tuple(lam * x for x in vec):
            raise ArithmeticError(f"eigenvector check failed for eigenvalue {lam}")
        out.append(Eigenvector(lam, vec))
    return out


def invariant(f: Sequence, v: Sequence[int]):
    """``<f, v>`` with ``v`` zero-padded to the length of ``f``."""
    if len(v) > len(f):
        raise ValueError(f"clique vector of length {len(v)} longer than functional of length {len(f)}")
    return sum(a * b for a, b in zip(f, v))


def predict_clique_vector(v: Sequence[int], m: int, A: BaryMatrix | None = None) -> tuple[int, ...]:
    """``A^m v``; the operator is truncated to ``len(v)``, which is exact."""
    if m < 0:
        raise ValueError("refinement depth must be >= 0")
    v = tuple(int(x) for x in v)
    if not v:
        return v
    if A is None or A.N < len(v):
        A = barycentric_operator(len(v))
    A = A.leading(len(v))
    for _ in range(m):
        v = A.matvec(v)
    return v


def predict_vertex_count(v: Sequence[int], m: int) -> int:
    """Vertex count of the ``m``-th refinement: total simplex count after ``m-1`` steps."""
    if m == 0:
        return int(v[0]) if v else 0
    return sum(predict_clique_vector(v, m - 1))


@dataclass
class GrowthReport:
    limit: int
    vectors: list[tuple[int, ...]]
    ratios: list[list[Fraction]]  # ratios[m][k] = v_k(m+1) / v_k(m)
    errors: list[list[float]]  # relative distance of each ratio to ``limit``
    converging: list[bool]  # per k: errors nonincreasing after the first step

    def __str__(self) -> str:
        lines = [f"limit (d+1)! = {self.limit}"]
        for m, row in enumerate(self.ratios):
            lines.append(f"m={m}->{m + 1}: " + "  ".join(f"{float(r):.6f}" for r in row))
        return "\n".join(lines)


def growth_rate_check(v: Sequence[int], m: int) -> GrowthReport:
    """Ratios ``v_k(G_{j+1}) / v_k(G_j)`` for ``j < m`` against the top eigenvalue ``(d+1)!``."""
    v = tuple(int(x) for x in v)
    d = len(v) - 1
    limit = math.factorial(d + 1)
    A = barycentric_operator(len(v))
    seq = [v]
    for _ in range(m):
        seq.append(A.matvec(seq[-1]))
    ratios = [[Fraction(b, a) for a, b in zip(x, y)] for x, y in zip(seq, seq[1:])]
    errors = [[abs(float(r) - limit) / limit for r in row] for row in ratios]
    converging = []
    for k in range(len(v)):
        e = [row[k] for row in errors][1:]
        converging.append(all(b <= a + 1e-15 for a, b in zip(e, e[1:])))
    return GrowthReport(limit, seq, ratios, errors, converging)
