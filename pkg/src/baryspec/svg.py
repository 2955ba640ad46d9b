"""Minimal SVG writer for step functions on [0, 1]."""

from __future__ import annotations

from typing import Callable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .stepfunc import StepFunction

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    span = hi - lo if hi > lo else 1.0
    raw = span / count
    mag = 10 ** np.floor(np.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=raw)
    start = np.ceil(lo / step) * step
    return [float(t) for t in np.arange(start, hi + step * 1e-9, step)]


def step_plot(
    functions: Sequence[tuple[str, StepFunction]],
    overlay: tuple[str, Callable] | None = None,
    width: int = 640,
    height: int = 420,
    title: str = "",
    ymax: float | None = None,
) -> str:
    """Render step functions (and an optional smooth curve) as an SVG document."""
    margin = 50
    top = max(float(F.values[-1]) for _, F in functions) if functions else 1.0
    bottom = min(0.0, min(float(F.values[0]) for _, F in functions)) if functions else 0.0
    if overlay is not None:
        xs = np.linspace(0, 1, 401)
        ys = np.asarray(overlay[1](xs), dtype=float)
        top = max(top, float(ys.max()))
    if ymax is not None:
        top = ymax
    if top <= bottom:
        top = bottom + 1.0
    pw, ph = width - 2 * margin, height - 2 * margin

    def px(x: float) -> float:
        return margin + x * pw

    def py(y: float) -> float:
        y = min(max(y, bottom), top)
        return height - margin - (y - bottom) / (top - bottom) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{px(0)}" y1="{py(bottom)}" x2="{px(1)}" y2="{py(bottom)}" stroke="black"/>',
        f'<line x1="{px(0)}" y1="{py(bottom)}" x2="{px(0)}" y2="{py(top)}" stroke="black"/>',
    ]
    for t in _nice_ticks(0.0, 1.0):
        out.append(f'<line x1="{px(t):.2f}" y1="{py(bottom)}" x2="{px(t):.2f}" y2="{py(bottom) + 5}" stroke="black"/>')
        out.append(f'<text x="{px(t):.2f}" y="{py(bottom) + 18}" font-size="11" text-anchor="middle">{t:g}</text>')
    for t in _nice_ticks(bottom, top):
        out.append(f'<line x1="{px(0) - 5}" y1="{py(t):.2f}" x2="{px(0)}" y2="{py(t):.2f}" stroke="black"/>')
        out.append(f'<text x="{px(0) - 8}" y="{py(t) + 4:.2f}" font-size="11" text-anchor="end">{t:g}</text>')
    if title:
        out.append(f'<text x="{width / 2}" y="{margin / 2}" font-size="14" text-anchor="middle">{escape(title)}</text>')
    legend_y = margin
    for i, (label, F) in enumerate(functions):
        color = PALETTE[i % len(PALETTE)]
        pts = []
        n = F.n
        for k, v in enumerate(F.values):
            pts.append(f"{px(k / n):.2f},{py(v):.2f}")
            pts.append(f"{px((k + 1) / n):.2f},{py(v):.2f}")
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{" ".join(pts)}"/>')
        out.append(f'<text x="{px(0) + 10}" y="{legend_y + 14 * i}" font-size="11" fill="{color}">{escape(label)}</text>')
    if overlay is not None:
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(f'<polyline fill="none" stroke="black" stroke-dasharray="4 3" stroke-width="1" points="{pts}"/>')
        out.append(
            f'<text x="{px(0) + 10}" y="{legend_y + 14 * len(functions)}" font-size="11">{escape(overlay[0])}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
