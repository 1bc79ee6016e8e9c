"""Hand-written SVG for the region figure and log-log decay scatters."""
from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from .uniqueness import region_boundary

SIZE = 420
PAD = 50


def _xy(a: float, b: float) -> tuple[float, float]:
    span = SIZE - 2 * PAD
    return PAD + a * span, SIZE - PAD - b * span


def _path(points: Iterable[tuple[float, float]], close: bool = True) -> str:
    pts = [_xy(a, b) for a, b in points]
    body = " ".join(f"{'M' if i == 0 else 'L'}{x:.2f},{y:.2f}" for i, (x, y) in enumerate(pts))
    return body + (" Z" if close else "")


def region_svg(argmax: Optional[tuple[float, float]] = None, samples: int = 200) -> str:
    """Unit square with A shaded, the curves ``(1-t)²/(2-t)`` and ``α + β = 1``."""
    t = np.linspace(0.0, 1.0, samples)
    f = region_boundary(t)
    # α < f(β): region left of the curve; β < f(α): region below the mirrored curve
    left = [(0.0, 0.0)] + [(float(fi), float(ti)) for ti, fi in zip(t, f)] + [(0.0, 1.0)]
    below = [(0.0, 0.0)] + [(float(ti), float(fi)) for ti, fi in zip(t, f)] + [(1.0, 0.0)]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           '<rect width="100%" height="100%" fill="white"/>',
           f'<path d="{_path(left)}" fill="#9ecae1" fill-opacity="0.8" stroke="none"/>',
           f'<path d="{_path(below)}" fill="#9ecae1" fill-opacity="0.8" stroke="none"/>',
           f'<path d="{_path([(float(fi), float(ti)) for ti, fi in zip(t, f)], False)}" '
           'fill="none" stroke="#08519c" stroke-width="1.5"/>',
           f'<path d="{_path([(float(ti), float(fi)) for ti, fi in zip(t, f)], False)}" '
           'fill="none" stroke="#08519c" stroke-width="1.5"/>',
           f'<path d="{_path([(0, 1), (1, 0)], False)}" fill="none" stroke="#636363" '
           'stroke-dasharray="4,3"/>',
           f'<path d="{_path([(0, 0), (1, 0), (1, 1), (0, 1)])}" fill="none" stroke="black"/>']
    for v in (0.0, 0.5, 1.0):
        x, y = _xy(v, 0)
        out.append(f'<text x="{x:.2f}" y="{y + 18:.2f}" font-size="12" '
                   f'text-anchor="middle">{v:g}</text>')
        x, y = _xy(0, v)
        out.append(f'<text x="{x - 8:.2f}" y="{y + 4:.2f}" font-size="12" '
                   f'text-anchor="end">{v:g}</text>')
    x, y = _xy(0.5, 0)
    out.append(f'<text x="{x:.2f}" y="{y + 36:.2f}" font-size="14" text-anchor="middle">α</text>')
    x, y = _xy(0, 0.5)
    out.append(f'<text x="{x - 32:.2f}" y="{y:.2f}" font-size="14" text-anchor="middle">β</text>')
    if argmax is not None:
        x, y = _xy(*argmax)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#e6550d"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def loglog_svg(xs: Sequence[float], ys: Sequence[float], slope: Optional[float] = None) -> str:
    """Scatter of ``log y`` against ``log x`` with an optional fitted line."""
    lx = np.log10(np.asarray(xs, dtype=float))
    ly = np.log10(np.asarray(ys, dtype=float))
    x0, x1 = float(lx.min()), float(lx.max())
    y0, y1 = float(ly.min()), float(ly.max())
    sx = max(x1 - x0, 1e-12)
    sy = max(y1 - y0, 1e-12)

    def norm(a, b):
        return (a - x0) / sx, (b - y0) / sy

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           '<rect width="100%" height="100%" fill="white"/>',
           f'<path d="{_path([(0, 0), (1, 0), (1, 1), (0, 1)])}" fill="none" stroke="black"/>']
    for a, b in zip(lx, ly):
        x, y = _xy(*norm(a, b))
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="#3182bd"/>')
    if slope is not None and math.isfinite(slope):
        c = float(np.mean(ly - slope * lx))
        ends = [norm(x0, c + slope * x0), norm(x1, c + slope * x1)]
        out.append(f'<path d="{_path(ends, False)}" stroke="#e6550d" fill="none"/>')
        out.append(f'<text x="{PAD}" y="{PAD - 12}" font-size="12">slope {slope:.4g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
