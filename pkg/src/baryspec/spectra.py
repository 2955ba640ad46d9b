"""Laplacian-family operators, symmetric eigensolvers and spectral step functions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import whitney_complex
from .graphs import Graph, GraphError
from .stepfunc import StepFunction, l1_distance

__all__ = [
    "EigenError",
    "adjacency",
    "kirchhoff",
    "normalized_laplacian",
    "ChainComplex",
    "chain_complex",
    "dirac",
    "hodge_block",
    "hodge_laplacian",
    "Spectrum",
    "eigenvalues",
    "jacobi_eigenvalues",
    "spectral_function",
    "l1_distance",
    "limit_d1",
    "dos_d1",
    "ids_d1",
    "quadratic_map",
    "cycle_spectrum",
    "integrated_density",
    "gaps",
    "Gap",
    "SchurReport",
    "schur_check",
    "lidskii_bound",
    "supertrace_heat",
    "dirac_zeta",
    "write_spectrum_csv",
    "read_spectrum_csv",
    "write_samples_csv",
]


class EigenError(ArithmeticError):
    pass


# -- operators ------------------------------------------------------------


def adjacency(G: Graph) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=np.int64)
    if G.edges:
        e = np.asarray(G.edges)
        A[e[:, 0], e[:, 1]] = 1
        A[e[:, 1], e[:, 0]] = 1
    return A


def kirchhoff(G: Graph) -> np.ndarray:
    """``L = B - A`` with integer entries."""
    A = adjacency(G)
    return np.diag(A.sum(axis=1)) - A


def normalized_laplacian(G: Graph) -> np.ndarray:
    """``B^{-1/2} A B^{-1/2}``, similar to the random-walk operator ``A B^{-1}``."""
    A = adjacency(G).astype(float)
    deg = A.sum(axis=1)
    if np.any(deg == 0):
        raise GraphError(f"vertex {int(np.argmin(deg))} is isolated; normalized form needs degree >= 1")
    s = 1.0 / np.sqrt(deg)
    return s[:, None] * A * s[None, :]


@dataclass
class ChainComplex:
    """Simplices per dimension and the signed incidence matrices between them.

    ``d[k]`` maps ``k``-chains to ``(k+1)``-chains, shape ``(v_{k+1}, v_k)``.
    """

    simplices: list[list[tuple[int, ...]]]
    d: list[np.ndarray]

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.simplices]

    @property
    def offsets(self) -> list[int]:
        return list(np.concatenate([[0], np.cumsum(self.sizes)]).astype(int))


def chain_complex(G: Graph) -> ChainComplex:
    """Exterior derivatives of the Whitney complex, simplices oriented by vertex order.

    Dropping the ``i``-th vertex of a simplex contributes sign ``(-1)^i``.
    """
    simplices = whitney_complex(G)
    ds = []
    for k in range(len(simplices) - 1):
        lower = {s: i for i, s in enumerate(simplices[k])}
        D = np.zeros((len(simplices[k + 1]), len(simplices[k])), dtype=np.int64)
        for r, s in enumerate(simplices[k + 1]):
            for i in range(len(s)):
                D[r, lower[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        ds.append(D)
    return ChainComplex(simplices, ds)


def dirac(G: Graph, cc: ChainComplex | None = None) -> np.ndarray:
    """``D = d + d^T`` on the space of all simplices (integer entries)."""
    cc = cc or chain_complex(G)
    off = cc.offsets
    D = np.zeros((off[-1], off[-1]), dtype=np.int64)
    for k, dk in enumerate(cc.d):
        D[off[k + 1]:off[k + 2], off[k]:off[k + 1]] = dk
        D[off[k]:off[k + 1], off[k + 1]:off[k + 2]] = dk.T
    return D


def hodge_block(G: Graph, k: int, cc: ChainComplex | None = None) -> np.ndarray:
    """Form Laplacian ``L_k = d_{k-1} d_{k-1}^T + d_k^T d_k`` on ``k``-simplices."""
    cc = cc or chain_complex(G)
    if not 0 <= k < len(cc.simplices):
        raise ValueError(f"no {k}-simplices")
    n = cc.sizes[k]
    L = np.zeros((n, n), dtype=np.int64)
    if k >= 1:
        L += cc.d[k - 1] @ cc.d[k - 1].T
    if k < len(cc.d):
        L += cc.d[k].T @ cc.d[k]
    return L


def hodge_laplacian(G: Graph, cc: ChainComplex | None = None) -> np.ndarray:
    """Block-diagonal ``D^2`` assembled from the form Laplacians."""
    cc = cc or chain_complex(G)
    off = cc.offsets
    H = np.zeros((off[-1], off[-1]), dtype=np.int64)
    for k in range(len(cc.simplices)):
        H[off[k]:off[k + 1], off[k]:off[k + 1]] = hodge_block(G, k, cc)
    return H


# -- eigensolvers -----------------------------------------------------------


@dataclass
class Spectrum:
    values: np.ndarray
    tol: float
    method: str = "lapack"

    def __len__(self) -> int:
        return self.values.size

    def positive(self) -> np.ndarray:
        return self.values[self.values > self.tol]


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        if not np.allclose(M, M.T, rtol=0, atol=1e-12 * max(1.0, float(np.abs(M).max()))):
            raise ValueError("matrix is not symmetric")
    return M.astype(float)


def jacobi_eigenvalues(M: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations; slow but independent of LAPACK, meant for ``n <= 64``."""
    A = _check_symmetric(M).copy()
    n = A.shape[0]
    scale = max(float(np.abs(A).max()), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(A, -1) ** 2))
        if off <= tol * scale:
            return np.sort(np.diag(A))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                Ap, Aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                Ap, Aq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq
    raise EigenError(f"Jacobi iteration did not converge for a {n}x{n} matrix")


def eigenvalues(M: np.ndarray, tol: float | None = None, method: str = "lapack", check: int = 3) -> Spectrum:
    """Full ascending spectrum of a symmetric matrix.

    ``method="lapack"`` uses the tridiagonal reduction in ``numpy.linalg.eigh``;
    ``method="jacobi"`` the cyclic Jacobi routine above. The default tolerance
    is ``1e-10 * ||M||_inf``. For the LAPACK path ``check`` eigenpairs spread
    over the spectrum are verified to satisfy ``||Mv - lam v|| <= tol``.
    """
    A = _check_symmetric(M)
    n = A.shape[0]
    norm = float(np.abs(A).sum(axis=1).max()) if n else 0.0
    if tol is None:
        tol = 1e-10 * max(norm, 1.0)
    if n == 0:
        return Spectrum(np.zeros(0), tol, method)
    if method == "jacobi":
        vals = jacobi_eigenvalues(A, tol=1e-14)
    elif method == "lapack":
        try:
            if check:
                vals, vecs = np.linalg.eigh(A)
                for i in np.unique(np.linspace(0, n - 1, min(check, n)).astype(int)):
                    r = np.linalg.norm(A @ vecs[:, i] - vals[i] * vecs[:, i])
                    if r > tol:
                        raise EigenError(f"residual {r:.3e} above {tol:.3e} for a {n}x{n} matrix")
            else:
                vals = np.linalg.eigvalsh(A)
        except np.linalg.LinAlgError as exc:
            raise EigenError(f"eigensolver failed for a {n}x{n} matrix: {exc}") from exc
    else:
        raise ValueError(f"unknown method {method!r}")
    return Spectrum(np.sort(vals), tol, method)


def spectral_function(S: Spectrum | np.ndarray) -> StepFunction:
    vals = S.values if isinstance(S, Spectrum) else S
    return StepFunction(vals)


# -- closed forms for triangle-free graphs ----------------------------------


def limit_d1(x):
    """Limiting spectral function ``4 sin^2(pi x / 2)``."""
    return 4.0 * np.sin(np.pi * np.asarray(x, dtype=float) / 2.0) ** 2


def dos_d1(x):
    """Arcsine density ``1 / (pi sqrt(x (4 - x)))`` on ``(0, 4)``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where((x > 0) & (x < 4), 1.0 / (np.pi * np.sqrt(x * (4.0 - x))), 0.0)
    return out if out.ndim else float(out)


def ids_d1(x):
    """Integrated density ``(2/pi) arcsin(sqrt(x)/2)``, clamped to ``[0, 1]``."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 4.0)
    return (2.0 / np.pi) * np.arcsin(np.sqrt(x) / 2.0)


def quadratic_map(z):
    return z * (4.0 - z)


def cycle_spectrum(n: int) -> np.ndarray:
    """Sorted Kirchhoff spectrum of ``C_n``: ``4 sin^2(pi k / n)``."""
    k = np.arange(1, n + 1)
    return np.sort(4.0 * np.sin(np.pi * k / n) ** 2)


# -- spectral statistics ----------------------------------------------------


def integrated_density(S: Spectrum | np.ndarray):
    """Empirical CDF ``E -> #{lam <= E} / n``."""
    return spectral_function(S).inverse


@dataclass(frozen=True)
class Gap:
    k: int  # jump sits between the k-th and (k+1)-th eigenvalue, 1-based
    position: float  # k / n
    jump: float


def gaps(S: Spectrum | np.ndarray, top: int | None = None) -> list[Gap]:
    """Jumps ``lam_{k+1} - lam_k`` at position ``k/n``, largest first, ties by position."""
    vals = S.values if isinstance(S, Spectrum) else np.sort(np.asarray(S, dtype=float))
    n = vals.size
    jumps = np.diff(vals)
    order = sorted(range(n - 1), key=lambda i: (-jumps[i], i))
    out = [Gap(i + 1, (i + 1) / n, float(jumps[i])) for i in order]
    return out[:top] if top is not None else out


@dataclass
class SchurReport:
    degree_integrals: np.ndarray
    spectral_integrals: np.ndarray
    holds: bool
    endpoint_gap: float

    @property
    def slack(self) -> np.ndarray:
        return self.degree_integrals - self.spectral_integrals


def schur_check(G: Graph, tol: float = 1e-8, spectrum: Spectrum | None = None) -> SchurReport:
    """Compare integrated degree and spectral functions at every ``k/n``."""
    S = spectrum or eigenvalues(kirchhoff(G))
    H = StepFunction(sorted(G.degrees())).partial_integrals()
    F = spectral_function(S).partial_integrals()
    end = abs(H[-1] - F[-1])
    return SchurReport(H, F, bool(np.all(H >= F - tol) and end <= tol), float(end))


def lidskii_bound(G: Graph, H: Graph) -> tuple[float, int]:
    """``(||lam - mu||_1, sum |L - K|)`` for two graphs on one vertex set."""
    if G.n != H.n:
        raise GraphError(f"vertex counts differ: {G.n} vs {H.n}")
    L, K = kirchhoff(G), kirchhoff(H)
    lam = eigenvalues(L).values
    mu = eigenvalues(K).values
    return float(np.abs(lam - mu).sum()), int(np.abs(L - K).sum())


def supertrace_heat(G: Graph, t: float, cc: ChainComplex | None = None) -> float:
    """``sum_k (-1)^k tr exp(-t L_k)``."""
    cc = cc or chain_complex(G)
    total = 0.0
    for k in range(len(cc.simplices)):
        lam = eigenvalues(hodge_block(G, k, cc)).values
        total += (-1) ** k * np.exp(-t * lam).sum()
    return float(total)


def dirac_zeta(S: Spectrum | np.ndarray, s, tol: float | None = None) -> complex:
    """``sum lam^{-s}`` over the eigenvalues above ``tol``."""
    if isinstance(S, Spectrum):
        vals = S.values
        tol = S.tol if tol is None else tol
    else:
        vals = np.asarray(S, dtype=float)
        tol = 1e-10 if tol is None else tol
    pos = vals[vals > tol].astype(complex)
    return complex(np.sum(np.exp(-complex(s) * np.log(pos))))


# -- CSV --------------------------------------------------------------------


def write_spectrum_csv(S: Spectrum | np.ndarray, fh) -> None:
    vals = S.values if isinstance(S, Spectrum) else S
    fh.write("index,eigenvalue\n")
    for i, v in enumerate(vals):
        fh.write(f"{i},{float(v):.17g}\n")


def read_spectrum_csv(fh) -> np.ndarray:
    lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != "index,eigenvalue":
        raise ValueError("not a spectrum CSV (header 'index,eigenvalue' expected)")
    rows = [ln.split(",") for ln in lines[1:]]
    return np.array([float(v) for _, v in sorted(rows, key=lambda r: int(r[0]))])


def write_samples_csv(F: StepFunction, grid, fh) -> None:
    fh.write("x,F(x)\n")
    for x, y in zip(grid, F.sample(grid)):
        fh.write(f"{float(x):.17g},{float(y):.17g}\n")
