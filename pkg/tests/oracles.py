"""Reference computations that share no code with the package.

Everything here is deliberately naive: dense Riemann sums, exact rational
arithmetic and literal transcriptions of the defining formulas.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def riemann_extension(g, xi: float, eta: float, lo: float, hi: float, n: int = 400_001) -> complex:
    """Trapezoid sum of ``g(t) exp(-2πi(ξt + ηt²))`` on a uniform grid."""
    t = np.linspace(lo, hi, n)
    f = g(t) * np.exp(-2j * np.pi * (xi * t + eta * t * t))
    h = t[1] - t[0]
    return complex(h * (f.sum() - 0.5 * (f[0] + f[-1])))


def riemann_transform(g, xi: float, lo: float, hi: float, n: int = 400_001, sign: int = -1) -> complex:
    t = np.linspace(lo, hi, n)
    f = g(t) * np.exp(sign * 2j * np.pi * xi * t)
    h = t[1] - t[0]
    return complex(h * (f.sum() - 0.5 * (f[0] + f[-1])))


def gaussian(t):
    return np.exp(-np.pi * np.asarray(t, dtype=float) ** 2)


def bump(t, center=0.0, radius=1.0):
    s = (np.asarray(t, dtype=float) - center) / radius
    out = np.zeros_like(s)
    inside = np.abs(s) < 1
    out[inside] = np.exp(-1.0 / (1.0 - s[inside] ** 2))
    return out


def odd_bump(t, radius=1.0):
    return np.asarray(t, dtype=float) / radius * bump(t, 0.0, radius)


def region_exact(a: Fraction, b: Fraction) -> bool:
    """Region A test in exact rational arithmetic."""
    if not (0 < a < 1 and 0 < b < 1):
        return False
    return a < (1 - b) ** 2 / (2 - b) or b < (1 - a) ** 2 / (2 - a)


def c_lemma_exact(a: Fraction, b: Fraction) -> int:
    return 1 + math.floor(2 * min(a, b) / (1 - a - b))


def c_three_lines_exact(alpha: Fraction, gamma: Fraction) -> int:
    return 2 * max(2, 1 + 3 * math.ceil(gamma / (1 - gamma)), 1 + 3 * math.ceil(alpha / (1 - alpha)))


def enumerate_lambda(branches, N: int) -> set[tuple[float, float]]:
    """Direct enumeration; ``branches`` holds (kind, param, c, e, start) tuples."""
    pts = set()
    for kind, param, c, e, start in branches:
        for n in range(start, N + 1):
            r = c * float(n) ** e
            if kind == "horizontal":
                cand = [(r, param), (-r, param)]
            elif kind == "through_origin":
                cand = [(r, param * r), (-r, -param * r)]
            else:
                cand = [(param, r), (param, -r)]
            pts.update((x + 0.0, y + 0.0) for x, y in cand)
    return pts


def ns_margin_loop(u, p: float, tail: int) -> float:
    n = 100 * tail
    best = -math.inf
    for j in range(n - tail, n):
        uj, uj1 = u(j), u(j + 1)
        best = max(best, abs(uj) ** (p - 1) * (uj1 - uj))
    return best


def power_interval(alpha: float, beta: float) -> tuple[float, float]:
    """Exponents p with αp < 1 and βp/(p-1) < 1 form (1/(1-β), 1/α)."""
    lo = 1.0 / (1.0 - beta) if beta < 1 else math.inf
    hi = 1.0 / alpha
    return lo, hi


def region_area_montecarlo(n: int = 400_000, seed: int = 7) -> float:
    rng = np.random.default_rng(seed)
    a, b = rng.random(n), rng.random(n)
    inside = (a < (1 - b) ** 2 / (2 - b)) | (b < (1 - a) ** 2 / (2 - a))
    return float(inside.mean())
