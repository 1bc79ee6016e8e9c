"""Panel Gauss-Legendre quadrature for integrands carrying a quadratic phase.

Everything in the package reduces to integrals of the form

    ∫_lo^hi f(t) exp(-2πi (xi t + eta t²)) dt

with a smooth (or piecewise smooth) amplitude ``f``.  Panels are laid out so
that the phase advances by at most two cycles per panel, the stationary point
``t* = -xi / (2 eta)`` is always a panel boundary, and panels are bisected
until the difference between a high and a low order rule meets a width
proportional share of the tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import NonConvergence

HI_ORDER = 24
LO_ORDER = 20
CYCLES_PER_PANEL = 2.0
# relative size below which a panel's error is treated as rounding noise
ROUNDOFF = 2e-15

Amplitude = Callable[[np.ndarray], np.ndarray]


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral together with its estimated absolute error."""

    value: complex
    error: float
    panels: int = 0
    edges: Optional[np.ndarray] = None

    def __complex__(self) -> complex:
        return complex(self.value)


def stationary_point(xi: float, eta: float) -> Optional[float]:
    if eta == 0.0:
        return None
    return -xi / (2.0 * eta)


def initial_panels(lo: float, hi: float, xi: float = 0.0, eta: float = 0.0,
                   breakpoints: Iterable[float] = (), cycles: float = CYCLES_PER_PANEL,
                   min_per_segment: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """Split ``[lo, hi]`` into panels with at most ``cycles`` phase turns each."""
    cuts = {lo, hi}
    ts = stationary_point(xi, eta)
    if ts is not None and lo < ts < hi:
        cuts.add(ts)
    cuts.update(b for b in breakpoints if lo < b < hi)
    edges = np.array(sorted(cuts))
    pieces = []
    for s0, s1 in zip(edges[:-1], edges[1:]):
        # the instantaneous frequency is linear in t, so its max sits at an end
        fmax = max(abs(xi + 2 * eta * s0), abs(xi + 2 * eta * s1))
        n = max(min_per_segment, math.ceil(fmax * (s1 - s0) / cycles))
        pieces.append(np.linspace(s0, s1, n + 1)[:-1])
    left = np.concatenate(pieces)
    right = np.append(left[1:], hi)
    return left, right


def _apply_rule(f: Amplitude, a: np.ndarray, b: np.ndarray, xi: float, eta: float,
                n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = gauss_legendre(n)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    t = mid[:, None] + half[:, None] * x[None, :]
    vals = np.asarray(f(t.ravel()), dtype=complex).reshape(t.shape)
    if xi != 0.0 or eta != 0.0:
        vals = vals * np.exp(-2j * np.pi * t * (xi + eta * t))
    q = (vals @ w) * half
    qabs = (np.abs(vals) @ w) * half
    return q, qabs


def oscillatory_quad(f: Amplitude, lo: float, hi: float, xi: float = 0.0, eta: float = 0.0,
                     tol: float = 1e-10, breakpoints: Sequence[float] = (),
                     max_panels: int = 4_000_000, keep_edges: bool = False) -> QuadResult:
    """Integrate ``f(t) exp(-2πi(xi t + eta t²))`` over ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Vectorised amplitude, evaluated on 1-D float arrays.
    lo, hi : float
        Finite integration limits.
    xi, eta : float
        Linear and quadratic phase coefficients.
    tol : float
        Target absolute error.
    breakpoints : sequence of float
        Points where ``f`` is not smooth (support ends, spline knots).
    max_panels : int
        Panel budget; exceeding it raises :class:`NonConvergence` with the
        partial value attached.
    keep_edges : bool
        Return the accepted panel edges in :attr:`QuadResult.edges`.

    Returns
    -------
    QuadResult
        The high order value and the summed ``|Q_hi - Q_lo|`` over accepted
        panels plus a rounding floor.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("integration limits must be finite")
    if hi <= lo:
        return QuadResult(0j, 0.0, 0, np.array([lo]) if keep_edges else None)
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b = initial_panels(lo, hi, xi, eta, breakpoints)
    span = hi - lo
    value = 0j
    error = 0.0
    abs_mass = 0.0
    accepted = 0
    kept: list[np.ndarray] = []
    while a.size:
        q_hi, qabs = _apply_rule(f, a, b, xi, eta, HI_ORDER)
        q_lo, _ = _apply_rule(f, a, b, xi, eta, LO_ORDER)
        err = np.abs(q_hi - q_lo)
        allowed = np.maximum(tol * (b - a) / span, ROUNDOFF * qabs)
        ok = (err <= allowed) | ((b - a) <= 1e-13 * span)
        value += q_hi[ok].sum()
        error += err[ok].sum()
        abs_mass += qabs[ok].sum()
        accepted += int(ok.sum())
        if keep_edges:
            kept.append(a[ok])
        bad = ~ok
        if not bad.any():
            break
        if accepted + 2 * int(bad.sum()) > max_panels:
            partial = value + q_hi[bad].sum()
            achieved = error + err[bad].sum()
            raise NonConvergence(
                f"panel budget {max_panels} exhausted (estimated error {achieved:.3g}, tol {tol:.3g})",
                value=complex(partial), error=float(achieved))
        a, b = a[bad], b[bad]
        m = 0.5 * (a + b)
        a, b = np.concatenate([a, m]), np.concatenate([m, b])
    error += 10 * ROUNDOFF * abs_mass
    edges = None
    if keep_edges:
        edges = np.append(np.sort(np.concatenate(kept)), hi)
    return QuadResult(complex(value), float(error), accepted, edges)


def fixed_rule_transform(f: Amplitude, edges: np.ndarray, xis: np.ndarray, sign: int = -1,
                         order: int = HI_ORDER, cycles: float = CYCLES_PER_PANEL,
                         chunk: int = 256) -> np.ndarray:
    """Evaluate ``∫ f(t) exp(sign·2πi xi t) dt`` for many ``xi`` at once.

    ``edges`` is a partition on which ``f`` alone is resolved; each panel is
    subdivided further so that no panel carries more than ``cycles`` turns at
    the largest ``|xi|`` of the current chunk.  Intended for building tables,
    where a fixed composite rule beats one adaptive run per abscissa.
    """
    xis = np.asarray(xis, dtype=float)
    out = np.empty(xis.shape, dtype=complex)
    if xis.size == 0:
        return out
    flat = xis.ravel()
    order_idx = np.argsort(np.abs(flat))
    res = np.empty(flat.size, dtype=complex)
    x, w = gauss_legendre(order)
    widths = np.diff(edges)
    for start in range(0, flat.size, chunk):
        idx = order_idx[start:start + chunk]
        fmax = float(np.abs(flat[idx]).max())
        nsub = np.maximum(1, np.ceil(widths * fmax / cycles)).astype(int)
        a = np.repeat(edges[:-1], nsub) + np.concatenate(
            [np.arange(k) * (wd / k) for k, wd in zip(nsub, widths)])
        h = np.repeat(widths / nsub, nsub)
        half = 0.5 * h
        t = (a + half)[:, None] + half[:, None] * x[None, :]
        fw = (np.asarray(f(t.ravel()), dtype=complex).reshape(t.shape) * (w * half[:, None])).ravel()
        tt = t.ravel()
        res[idx] = np.exp(sign * 2j * np.pi * np.outer(flat[idx], tt)) @ fw
    out[...] = res.reshape(xis.shape)
    return out
