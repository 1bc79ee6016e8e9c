"""Restriction to a line through the origin, and a two-line non-uniqueness example.

On ``y = ax`` the extension only sees the even part of
``ψ(x) = ĝ(x)e^{-πix/a}``.  Folding it onto ``s = x²`` gives

    H(s) = (ĝ(√s)e^{-πi√s/a} + ĝ(-√s)e^{πi√s/a}) / (2√s),   s > 0,

with ``H = 0`` for ``s ≤ 0``, and ``μ̂(x, ax) = (2iax)^{-1/2} e^{iπx/(2a)} Ĥ(-1/(4ax))``.
An odd ψ therefore kills the whole line.  If its support is also small,
μ̂ vanishes at every horizontal node outside that support.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .density import (Density, OddBump, PhaseModulated, integration_window, moment,
                      transform_table)
from .errors import DegenerateEta, SpecError
from .extension import EvalPoint, ParabolaMeasure, extension_quadrature
from .quadrature import QuadResult, oscillatory_quad
from .uniqueness import LambdaSpec, concurrent_lines

H_TOL = 1e-10
# inverse transform accuracy for the counterexample density
G_TABLE_TOL = 1e-11


@dataclass(frozen=True)
class HTransform:
    source: ParabolaMeasure
    a: float

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("slope a must be nonzero")

    def __call__(self, s, tol: float = H_TOL):
        return h_value(self, s, tol)


def h_value(H: HTransform, s, tol: float = H_TOL):
    """``H(s)``; exactly zero for ``s ≤ 0``.  Accepts scalars and arrays."""
    ghat, _ = H.source.ghat(tol)
    s_arr = np.asarray(s, dtype=float)
    out = np.zeros(s_arr.shape, dtype=complex)
    pos = s_arr > 0
    if pos.any():
        r = np.sqrt(s_arr[pos])
        ph = np.exp(-1j * np.pi * r / H.a)
        out[pos] = (ghat(r) * ph + ghat(-r) / ph) / (2 * r)
    return complex(out) if s_arr.ndim == 0 else out


def h_transform_ft(H: HTransform, sigma: float, tol: float = H_TOL,
                   full_output: bool = False):
    """``Ĥ(σ) = ∫_0^∞ H(s)e^{-2πiσs} ds``, computed after substituting ``s = t²``.

    The substitution turns the integrable ``1/(2√s)`` singularity into the
    smooth integrand ``2t·H(t²)`` on ``t > 0``.
    """
    ghat, gerr = H.source.ghat(tol)
    lo, hi, tail = integration_window(ghat, tol / 2)
    T = max(abs(lo), abs(hi))

    def f(t):
        return 2 * t * h_value(H, t * t, tol)

    bps = tuple(abs(b) for b in ghat.breakpoints() if b != 0)
    res = oscillatory_quad(f, 0.0, T, 0.0, sigma, tol=tol / 2, breakpoints=bps)
    out = QuadResult(res.value, res.error + tail + gerr, res.panels)
    return out if full_output else out.value


@dataclass(frozen=True)
class HIdentityReport:
    lhs: complex
    rhs: complex
    discrepancy: float
    error_budget: float


def h_identity_sides(m: ParabolaMeasure, a: float, x: float, tol: float = H_TOL) -> HIdentityReport:
    """Both sides of the line-restriction identity at ``(x, ax)``."""
    if a == 0:
        raise ValueError("slope a must be nonzero")
    if x == 0:
        raise DegenerateEta("the restriction identity is singular at x = 0")
    lhs = extension_quadrature(m, (x, a * x), tol, full_output=True)
    ft = h_transform_ft(HTransform(m, a), -1.0 / (4 * a * x), tol, full_output=True)
    pref = (2j * a * x) ** -0.5 * cmath.exp(1j * math.pi * x / (2 * a))
    rhs = pref * ft.value
    return HIdentityReport(lhs.value, rhs, abs(lhs.value - rhs),
                           lhs.error + abs(pref) * ft.error)


def verify_h_identity(m: ParabolaMeasure, a: float, x: float, tol: float = H_TOL) -> float:
    """``|μ̂(x, ax) - (2iax)^{-1/2} e^{iπx/(2a)} Ĥ(-1/(4ax))|``."""
    return h_identity_sides(m, a, x, tol).discrepancy


def counterexample_ghat(r: float, a: float, amplitude: complex = 1.0) -> Density:
    """``ĝ(x) = e^{πix/a}ψ(x)`` with ``ψ`` the odd bump of radius ``r``."""
    return PhaseModulated(OddBump(r, amplitude), linear_phase=1.0 / (2 * a))


@lru_cache(maxsize=8)
def build_counterexample(r: float = 0.5, a: float = 1.0, c2: float = 1.0,
                         amplitude: complex = 1.0) -> ParabolaMeasure:
    """Nonzero measure whose extension vanishes on ``y = ax`` and on ``{(±c₂n^δ, 0)}``.

    ``g`` is the inverse transform of :func:`counterexample_ghat`, tabulated
    on an adaptive grid; the exact ``ĝ`` is kept as the measure's cache.
    """
    if not r > 0:
        raise SpecError("radius r must be positive")
    if a == 0:
        raise SpecError("slope a must be nonzero")
    if r >= c2:
        raise SpecError(f"need r < c2 so the bump misses the horizontal nodes (r={r}, c2={c2})")
    ghat = counterexample_ghat(r, a, amplitude)
    tab = transform_table(ghat, G_TABLE_TOL, sign=+1)
    return ParabolaMeasure(tab.table, cached_ghat=ghat,
                           label=f"odd-bump counterexample r={r} a={a}",
                           ghat_error=0.0)


def counterexample_lambda(a: float = 1.0, c2: float = 1.0, alpha: float = 0.25,
                          beta: float = 0.25, c1: float = 1.0) -> LambdaSpec:
    """``{±(c₁n^{-α}, a c₁n^{-α})}_{n≥1} ∪ {(±c₂n^{β/2}, 0)}_{n≥0}``."""
    return concurrent_lines(a, alpha, beta, c1, c2)


def g_mass(m: ParabolaMeasure, tol: Optional[float] = None) -> float:
    """``I_0(g) = ∫|g|``."""
    return moment(m.density, 0, tol).value


def rigidity_defect(psi: Density, rho: float, x) -> np.ndarray:
    """``|e^{-πiρx}ψ(x) + e^{πiρx}ψ(-x)|`` pointwise.

    This vanishes exactly when ``e^{-πiρx}ψ`` is odd; for odd ψ it equals
    ``2|sin(πρx)||ψ(x)|``.
    """
    x = np.asarray(x, dtype=float)
    ph = np.exp(-1j * np.pi * rho * x)
    return np.abs(ph * psi(x) + psi(-x) / ph)


def three_line_rigidity(psi: Density, a: float, d: float, grid) -> float:
    """Largest defect of a second oddness condition coming from ``y = dx``.

    With ``ψ = ĝe^{-πix/a}`` odd (vanishing on ``y = ax``), vanishing on
    ``y = dx`` as well requires ``ĝe^{-πix/d} = e^{-πiρx}ψ`` odd, where
    ``ρ = 1/d - 1/a``.  The maximum of the defect over ``grid`` is returned.
    """
    if a == 0 or d == 0:
        raise SpecError("slopes must be nonzero")
    if a == d:
        raise SpecError("the two lines must differ (a != d)")
    rho = 1.0 / d - 1.0 / a
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        return 0.0
    return float(rigidity_defect(psi, rho, grid).max())


def line_points(a: float, xs) -> list[EvalPoint]:
    return [EvalPoint(float(x), float(a * x)) for x in xs]
