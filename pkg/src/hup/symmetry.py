"""Galilean and pseudo-conformal symmetries of the extension field.

μ̂ solves ``(2πi ∂_η + ∂²_ξ) u = 0``, so the usual Schrödinger symmetries
act on it.  Shifts and quadratic modulations of the density are realised at
the level of measures; the pseudo-conformal inversion acts on evaluation
points and field values only.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .density import PhaseModulated, Translated
from .errors import PoleError, SpecError
from .extension import EvalPoint, ParabolaMeasure, _point
from .uniqueness import Branch, Horizontal, LambdaSpec, ThroughOrigin, Vertical, lambda_points

DET_TOL = 1e-12
POLE_TOL = 1e-14
# the phase constant that makes the inversion a symmetry of the η-scaled equation;
# UNSCALED_PHASE is the constant for i∂_y + ∂²_x
PHASE_CONSTANT = math.pi / 2
UNSCALED_PHASE = 0.25


@dataclass(frozen=True)
class MoebiusParams:
    """``(x, y) -> (x/(a+by), (c+dy)/(a+by))`` with ``ad - bc = 1``."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1) > DET_TOL:
            raise SpecError(f"need ad - bc = 1, got {det!r}")

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def inverse(self) -> "MoebiusParams":
        return MoebiusParams(self.d, -self.b, -self.c, self.a)


def galilean_shift(m: ParabolaMeasure, v: float) -> ParabolaMeasure:
    """Measure with density ``g(t - v)``.

    Its extension is ``e^{-2πi(vx + v²y)} μ̂(x + 2vy, y)``.
    """
    if v == 0:
        return m
    ghat = None if m.cached_ghat is None else PhaseModulated(m.cached_ghat, linear_phase=-v)
    return ParabolaMeasure(Translated(m.density, v), ghat, m.label, m.ghat_error)


def galilean_relation(m: ParabolaMeasure, v: float, p, evaluate) -> complex:
    """Right-hand side of the shift relation, using ``evaluate(m, point)`` for μ̂."""
    x, y = _point(p)
    return cmath.exp(-2j * math.pi * (v * x + v * v * y)) * evaluate(m, (x + 2 * v * y, y))


def quadratic_modulation(m: ParabolaMeasure, h: float) -> ParabolaMeasure:
    """Measure with density ``g(t)e^{-2πit²h}``, whose extension is ``μ̂(x, y + h)``."""
    if h == 0:
        return m
    return ParabolaMeasure(PhaseModulated(m.density, quadratic_phase=-h), label=m.label)


def _denominator(p: EvalPoint, M: MoebiusParams) -> float:
    den = M.a + M.b * p.eta
    if abs(den) <= POLE_TOL * max(1.0, abs(M.a), abs(M.b * p.eta)):
        raise PoleError(f"a + b*eta vanishes at {tuple(p)!r}")
    return den


def pseudo_conformal_point(p, M: MoebiusParams) -> EvalPoint:
    p = _point(p)
    den = _denominator(p, M)
    return EvalPoint(p.xi / den, (M.c + M.d * p.eta) / den)


def pseudo_conformal_prefactor(p, M: MoebiusParams, phase_constant: float = PHASE_CONSTANT) -> complex:
    """``(a+bη)^{-1/2} exp(i·k·b ξ²/(a+bη))`` with ``k = phase_constant``."""
    p = _point(p)
    den = _denominator(p, M)
    return complex(den) ** -0.5 * cmath.exp(1j * phase_constant * M.b * p.xi ** 2 / den)


def pseudo_conformal_value(value: complex, p, M: MoebiusParams,
                           phase_constant: float = PHASE_CONSTANT) -> complex:
    """Multiply a field value by the inversion prefactor at ``p``.

    For a solution ``u`` the transformed field is
    ``p -> pseudo_conformal_value(u(T p), p, M)`` with ``T`` the point map.
    ``phase_constant=UNSCALED_PHASE`` gives the prefactor for the unscaled
    equation ``i∂_y + ∂²_x``; the default matches the η scaling used here.
    """
    return pseudo_conformal_prefactor(p, M, phase_constant) * value


def transformed_field(field, M: MoebiusParams, phase_constant: float = PHASE_CONSTANT):
    """``(ξ, η) -> prefactor(ξ, η)·field(T(ξ, η))`` as a plain callable."""
    def out(x, y):
        q = pseudo_conformal_point((x, y), M)
        return pseudo_conformal_value(field(q.xi, q.eta), (x, y), M, phase_constant)
    return out


# ---------------------------------------------------------------------------
# images of node sets

_FIT_SAMPLES = 12


def _snap(v: float) -> float:
    r = round(v, 10)
    return r if abs(v - r) <= 1e-12 * max(1.0, abs(v)) else v


def _close(u, v, scale):
    return abs(u - v) <= 1e-10 * max(1.0, scale)


def _fit_branch(br: Branch, M: MoebiusParams) -> Optional[Branch]:
    """Recognise the image of one branch as a branch, or return None."""
    ns = range(br.start_index, br.start_index + _FIT_SAMPLES)
    src = br.points(br.start_index + _FIT_SAMPLES - 1)
    img = [pseudo_conformal_point(q, M) for q in src]
    xs = np.array([q.xi for q in img])
    ys = np.array([q.eta for q in img])
    scale = float(np.max(np.abs(np.concatenate([xs, ys]))))
    plus_x, plus_y = xs[0::2], ys[0::2]
    if np.ptp(xs) <= 1e-12 * max(1.0, scale):
        line, r = Vertical(_snap(float(xs[0]))), np.abs(plus_y)
    elif np.ptp(ys) <= 1e-12 * max(1.0, scale):
        line, r = Horizontal(_snap(float(ys[0]))), np.abs(plus_x)
    elif np.all(plus_x != 0):
        s = plus_y / plus_x
        if np.ptp(s) > 1e-12 * max(1.0, float(np.max(np.abs(s)))):
            return None
        line, r = ThroughOrigin(_snap(float(s[0]))), np.abs(plus_x)
    else:
        return None
    n = np.array(list(ns), dtype=float)
    pos = (n > 0) & (r > 0)
    if pos.sum() < 2:
        return None
    n1, n2 = n[pos][0], n[pos][-1]
    r1, r2 = r[pos][0], r[pos][-1]
    e = _snap(math.log(r2 / r1) / math.log(n2 / n1))
    c = _snap(float(r1 / n1 ** e))
    if e < 0 and br.start_index == 0:
        return None
    cand = Branch(line, c, e, br.start_index)
    got = cand.points(br.start_index + _FIT_SAMPLES - 1)
    remaining = list(zip(xs, ys))
    for gx, gy in got:
        hit = next((i for i, (u, v) in enumerate(remaining)
                    if _close(u, gx, scale) and _close(v, gy, scale)), None)
        if hit is None:
            return None
        remaining.pop(hit)
    return cand


def map_lambda(spec: LambdaSpec, M: MoebiusParams, N: int = 50) -> Union[LambdaSpec, list[EvalPoint]]:
    """Image of a node set under the point map.

    Every point with index ``≤ N`` is checked against the pole first.  When
    each branch maps onto a horizontal, vertical or through-origin line with
    power-law spacing the result is a :class:`LambdaSpec`, otherwise the
    mapped points themselves.
    """
    pts = lambda_points(spec, N)
    mapped = [pseudo_conformal_point(q, M) for q in pts]
    if M.is_identity:
        return spec
    branches = []
    for br in spec.branches:
        fit = _fit_branch(br, M)
        if fit is None:
            return mapped
        branches.append(fit)
    return LambdaSpec(tuple(branches))
