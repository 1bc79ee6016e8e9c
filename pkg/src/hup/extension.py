"""Fourier extension of a measure on the parabola ``y = x²``.

For ``dμ = g(t) dt`` on ``t -> (t, t²)``,

    μ̂(ξ, η) = ∫ g(t) exp(-2πi(ξ t + η t²)) dt,

which is computed here by two independent routes: direct oscillatory
quadrature of ``g``, and the ``f_y`` identity that rewrites μ̂ at height
``y ≠ 0`` as a rescaled transform of ``f_y(t) = ĝ(t) exp(iπt²/(2y))``.
"""
from __future__ import annotations

import cmath
import csv
import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, NamedTuple, Optional, Union

import numpy as np

from .density import (ComplexGaussian, Density, Gaussian, complex_gaussian_integral,
                      fourier_dual, gaussian_form, integration_window, transform_table,
                      quadratic_phase_integral)
from .errors import DegenerateEta
from .quadrature import QuadResult, oscillatory_quad

GHAT_TOL = 1e-9
DEGENERATE_ETA = 1e-12


class EvalPoint(NamedTuple):
    xi: float
    eta: float


@dataclass
class ParabolaMeasure:
    """The measure ``g(t) dt`` on the parabola, with a lazily built ĝ cache.

    ``cached_ghat`` holds ĝ as a density: the exact dual for Gaussian-type and
    Hermite densities, otherwise an adaptive :class:`~hup.density.SampleTable`.
    ``ghat_error`` bounds ``∫ |ĝ - cached_ghat|``.
    """

    density: Density
    cached_ghat: Optional[Density] = None
    label: str = ""
    ghat_error: float = 0.0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def ghat(self, tol: float = GHAT_TOL) -> tuple[Density, float]:
        """Return ``(ĝ, integrated error)``, building the cache on first use."""
        with self._lock:
            if self.cached_ghat is None or self.ghat_error > tol:
                dual = fourier_dual(self.density)
                if dual is not None:
                    self.cached_ghat, self.ghat_error = dual, 0.0
                else:
                    tab = transform_table(self.density, tol)
                    self.cached_ghat, self.ghat_error = tab.table, tab.integrated_error
            return self.cached_ghat, self.ghat_error


def _point(p) -> EvalPoint:
    return p if isinstance(p, EvalPoint) else EvalPoint(float(p[0]), float(p[1]))


def extension_quadrature(m: ParabolaMeasure, p, tol: Optional[float] = None,
                         full_output: bool = False):
    """μ̂(ξ, η) by direct quadrature of ``g(t) exp(-2πi(ξt + ηt²))``.

    With ``full_output`` a :class:`~hup.quadrature.QuadResult` carrying the
    error estimate is returned instead of the bare value.
    """
    p = _point(p)
    tol = m.density.default_tol if tol is None else tol
    res = quadratic_phase_integral(m.density, p.xi, p.eta, tol)
    return res if full_output else res.value


def extension_gaussian_closed_form(width: float, p) -> complex:
    """μ̂ for ``g(t) = exp(-π t²/width²)``: ``A^{-1/2} exp(-πξ²/A)``, ``A = width⁻² + 2iη``."""
    if not width > 0:
        raise ValueError("width must be positive")
    p = _point(p)
    a = 1.0 / width ** 2 + 2j * p.eta
    return complex(a ** -0.5 * cmath.exp(-math.pi * p.xi ** 2 / a))


def extension_closed_form(m: Union[ParabolaMeasure, Density], p) -> complex:
    """Exact μ̂ for any Gaussian-type density (shifted, modulated, chirped)."""
    d = m.density if isinstance(m, ParabolaMeasure) else m
    g = gaussian_form(d)
    if g is None:
        raise ValueError(f"no closed form for density kind {d.kind!r}")
    p = _point(p)
    return complex(complex_gaussian_integral(g, p.xi, p.eta))


def fy_prefactor(p) -> complex:
    """``(2iy)^{-1/2} exp(iπx²/(2y))`` with the principal root."""
    x, y = _point(p)
    return (2j * y) ** -0.5 * cmath.exp(1j * math.pi * x * x / (2 * y))


def fy_hat(m: ParabolaMeasure, y: float, s: float, tol: Optional[float] = None) -> QuadResult:
    """``f̂_y(s) = ∫ ĝ(t) e^{iπt²/(2y)} e^{-2πist} dt``."""
    if abs(y) < DEGENERATE_ETA:
        raise DegenerateEta(f"f_y is singular at eta={y!r}")
    tol = m.density.default_tol if tol is None else tol
    ghat, gerr = m.ghat(min(GHAT_TOL, tol / 4))
    lo, hi, tail = integration_window(ghat, tol / 2)
    res = oscillatory_quad(ghat, lo, hi, s, -1.0 / (4 * y), tol=tol / 2,
                           breakpoints=ghat.breakpoints())
    return QuadResult(res.value, res.error + tail + gerr, res.panels)


def extension_via_fy(m: ParabolaMeasure, p, tol: Optional[float] = None,
                     full_output: bool = False):
    """μ̂(x, y) = (2iy)^{-1/2} e^{iπx²/(2y)} f̂_y(x/(2y)), ``f_y(t) = ĝ(t) e^{iπt²/(2y)}``.

    Expanding ``e^{iπ(t-x)²/(2y)}`` leaves ``e^{-iπtx/y}``, so with the
    ``e^{-2πiξt}`` transform the argument is ``+x/(2y)``.  ``f̂_y(x/(2y))``
    is a quadratic-phase integral of ĝ with linear coefficient ``x/(2y)``
    and quadratic coefficient ``-1/(4y)``, so it goes through the same panel
    engine as the direct route.
    """
    x, y = _point(p)
    if abs(y) < DEGENERATE_ETA:
        raise DegenerateEta(f"f_y route is singular at eta={y!r}")
    tol = m.density.default_tol if tol is None else tol
    ghat, gerr = m.ghat(min(GHAT_TOL, tol / 4))
    scale = abs(2 * y) ** -0.5
    inner_tol = 0.5 * tol / scale
    lo, hi, tail = integration_window(ghat, inner_tol)
    inner = oscillatory_quad(ghat, lo, hi, x / (2 * y), -1.0 / (4 * y), tol=inner_tol,
                             breakpoints=ghat.breakpoints())
    value = fy_prefactor((x, y)) * inner.value
    res = QuadResult(complex(value), scale * (inner.error + tail + gerr), inner.panels)
    return res if full_output else res.value


Field = Callable[[float, float], complex]


def schrodinger_residual(m: Union[ParabolaMeasure, Field], p, h: float,
                         tol: Optional[float] = None) -> complex:
    """Centred-difference value of ``(2πi ∂_η + ∂²_ξ) μ̂`` at ``p``.

    ``m`` is either a measure (evaluated by quadrature) or any callable field
    ``(xi, eta) -> complex``, e.g. a closed form or a transformed solution.
    """
    if not h > 0:
        raise ValueError("h must be positive")
    x, y = _point(p)
    if isinstance(m, ParabolaMeasure):
        qtol = 1e-13 if tol is None else tol

        def f(a, b):
            return extension_quadrature(m, (a, b), qtol)
    else:
        f = m
    c = f(x, y)
    d_eta = (f(x, y + h) - f(x, y - h)) / (2 * h)
    d_xixi = (f(x + h, y) - 2 * c + f(x - h, y)) / (h * h)
    return complex(2j * math.pi * d_eta + d_xixi)


def _workers(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("HUP_THREADS", "1")))
    except ValueError:
        return 1


def evaluate_points(m: ParabolaMeasure, points: Iterable, tol: Optional[float] = None,
                    workers: Optional[int] = None) -> list[QuadResult]:
    """Direct-route evaluation at many points; ``HUP_THREADS`` caps the pool."""
    pts = [_point(p) for p in points]
    n = _workers(workers)

    def one(p):
        return extension_quadrature(m, p, tol, full_output=True)

    if n == 1 or len(pts) < 2:
        return [one(p) for p in pts]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(one, pts))


GRID_COLUMNS = ("xi", "eta", "re", "im", "abs", "est_error")


def evaluate_grid(m: ParabolaMeasure, xis: Iterable[float], etas: Iterable[float],
                  tol: Optional[float] = None, workers: Optional[int] = None) -> list[tuple]:
    pts = [EvalPoint(float(a), float(b)) for b in etas for a in xis]
    res = evaluate_points(m, pts, tol, workers)
    return [(p.xi, p.eta, r.value.real, r.value.imag, abs(r.value), r.error)
            for p, r in zip(pts, res)]


def write_grid_csv(rows: Iterable[tuple], path: Union[str, Path], header_comment: str = "") -> None:
    with open(path, "w", newline="") as fh:
        if header_comment:
            fh.write(f"# {header_comment}\n")
        w = csv.writer(fh)
        w.writerow(GRID_COLUMNS)
        for row in rows:
            w.writerow([repr(float(v)) for v in row])
