"""Monotone step functions on [0, 1] built from a sorted value list.

``F(x) = values[ceil(n x) - 1]`` on ``(0, 1]`` with ``F(0) = values[0]``: the
k-th value (1-based) is held on ``((k-1)/n, k/n]``. With this convention the
integral of ``F`` is exactly ``sum(values) / n`` and the distance between two
step functions integrates exactly over the merged breakpoint grid.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable

import numpy as np
from scipy import integrate, optimize

__all__ = ["StepFunction", "SpectralFunction", "l1_distance"]


class StepFunction:
    def __init__(self, values):
        vals = np.sort(np.asarray(values, dtype=float))
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("step function needs a nonempty 1-d value list")
        self.values = vals
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.n

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any((x < 0) | (x > 1)):
            raise ValueError("step functions live on [0, 1]")
        idx = np.clip(np.ceil(x * self.n).astype(int) - 1, 0, self.n - 1)
        out = self.values[idx]
        return out if out.ndim else float(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, StepFunction) and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, range=[{self.values[0]:.6g}, {self.values[-1]:.6g}])"

    def l1_norm(self) -> float:
        return float(np.abs(self.values).sum() / self.n)

    def integral(self, x: float) -> float:
        """``int_0^x F(t) dt``."""
        if not 0 <= x <= 1:
            raise ValueError("x must lie in [0, 1]")
        nx = x * self.n
        k = min(int(math.floor(nx)), self.n)
        head = self.values[:k].sum()
        tail = (nx - k) * self.values[k] if k < self.n else 0.0
        return float((head + tail) / self.n)

    def partial_integrals(self) -> np.ndarray:
        """Integral of ``F`` up to each breakpoint ``k/n``, ``k = 0..n``."""
        return np.concatenate([[0.0], np.cumsum(self.values)]) / self.n

    def sample(self, grid) -> np.ndarray:
        return np.asarray(self(np.asarray(grid, dtype=float)), dtype=float)

    def inverse(self, E):
        """Generalized inverse: fraction of values ``<= E`` (the integrated density)."""
        return np.searchsorted(self.values, np.asarray(E, dtype=float), side="right") / self.n

    def l1_distance(self, other, **kw) -> float:
        return l1_distance(self, other, **kw)


SpectralFunction = StepFunction


def _step_vs_step(F: StepFunction, G: StepFunction) -> float:
    n1, n2 = F.n, G.n
    L = n1 * n2 // math.gcd(n1, n2)
    breaks = np.union1d(np.arange(n1 + 1, dtype=np.int64) * (L // n1),
                        np.arange(n2 + 1, dtype=np.int64) * (L // n2))
    right = breaks[1:]
    widths = np.diff(breaks)
    # on (a, b] both functions are constant with index ceil(n b / L)
    i1 = -(-right * n1 // L) - 1
    i2 = -(-right * n2 // L) - 1
    return float(np.sum(widths * np.abs(F.values[i1] - G.values[i2])) / L)


def _step_vs_callable(F: StepFunction, f: Callable[[float], float], epsrel: float, probes: int = 16) -> float:
    total = err_total = 0.0
    n = F.n
    for k, lam in enumerate(F.values):
        a, b = k / n, (k + 1) / n
        eps = 1e-12 * (b - a)

        def g(t, lam=lam):
            return float(f(t)) - lam

        # split at sign changes of f - lam so the integrand keeps one sign per piece
        xs = np.linspace(a, b, probes + 1)
        gs = [g(x) for x in xs]
        pts = [a]
        for x0, x1, g0, g1 in zip(xs, xs[1:], gs, gs[1:]):
            if g0 * g1 < 0:
                r = optimize.brentq(g, x0, x1, xtol=1e-16)
                if pts[-1] + eps < r < b - eps:
                    pts.append(r)
        pts.append(b)
        for lo, hi in zip(pts, pts[1:]):
            if hi - lo > eps:
                val, err, *_ = integrate.quad(g, lo, hi, epsabs=0.0, epsrel=epsrel, limit=200, full_output=1)
                total += abs(val)
                err_total += err
    if err_total > max(epsrel * total, 1e-15):
        warnings.warn(f"L1 quadrature error estimate {err_total:.2e} exceeds {epsrel:.0e} relative", RuntimeWarning)
    return total


def l1_distance(F: StepFunction, other, epsrel: float = 1e-10) -> float:
    """L1 distance on [0, 1] to another step function or to a callable.

    Step functions integrate exactly over the merged grid of ``k/n`` points.
    For a callable each step is split where the callable crosses the step
    value, and each piece is integrated adaptively.
    """
    if isinstance(other, StepFunction):
        return _step_vs_step(F, other)
    return _step_vs_callable(F, other, epsrel)
