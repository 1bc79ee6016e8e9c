"""Exponent arithmetic for power-sequence uniqueness sets, and node sets Λ.

Region A is the open set of ``(α, β) ∈ (0,1)²`` with
``α < (1-β)²/(2-β)`` or ``β < (1-α)²/(2-α)``.  The integer constants, the
decay-exponent bootstrap and the gap criterion for power nodes all live here,
together with the machinery that turns a :class:`LambdaSpec` into points and
checks that a Fourier extension vanishes on them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DegenerateFit, DomainError, SpecError
from .extension import EvalPoint, ParabolaMeasure, evaluate_points

DIVERGENCE_CAP = 10 ** 6


@dataclass(frozen=True)
class ExponentPair:
    alpha: float
    beta: float

    def __iter__(self):
        yield self.alpha
        yield self.beta

    @property
    def in_region_a(self) -> bool:
        return region_a_contains(self)


PairLike = Union[ExponentPair, Sequence[float]]


def _pair(p: PairLike) -> tuple[float, float]:
    a, b = p
    return float(a), float(b)


def region_boundary(t):
    """``(1-t)²/(2-t)``, the curve bounding A."""
    return (1 - t) ** 2 / (2 - t)


def region_a_contains(p: PairLike) -> bool:
    a, b = _pair(p)
    if not (0 < a < 1 and 0 < b < 1):
        return False
    return a < region_boundary(b) or b < region_boundary(a)


def region_a_mask(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Vectorised :func:`region_a_contains`."""
    inside = (alpha > 0) & (alpha < 1) & (beta > 0) & (beta < 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        return inside & ((alpha < region_boundary(beta)) | (beta < region_boundary(alpha)))


def c_lemma(p: PairLike) -> int:
    """``C(α, β) = 1 + ⌊2 min(α, β)/(1 - α - β)⌋`` for ``α, β > 0``, ``α + β < 1``."""
    a, b = _pair(p)
    if a <= 0 or b <= 0:
        raise DomainError(f"exponents must be positive, got ({a}, {b})")
    if a + b >= 1:
        raise DomainError(f"need alpha + beta < 1, got {a + b}")
    return 1 + math.floor(2 * min(a, b) / (1 - a - b))


def c_three_lines(alpha: float, gamma: float) -> int:
    """Weight exponent threshold for three concurrent lines.

    ``2·max(2, 1 + 3⌈γ/(1-γ)⌉, 1 + 3⌈α/(1-α)⌉)``; the weighted slice must be
    integrable for some exponent strictly above this value.
    """
    for name, v in (("alpha", alpha), ("gamma", gamma)):
        if not 0 < v < 1:
            raise DomainError(f"{name} must lie in (0, 1), got {v}")
    return 2 * max(2, 1 + 3 * math.ceil(gamma / (1 - gamma)),
                   1 + 3 * math.ceil(alpha / (1 - alpha)))


@dataclass(frozen=True)
class BootstrapStep:
    j: int
    k: int


@dataclass(frozen=True)
class BootstrapTrajectory:
    steps: tuple[BootstrapStep, ...]
    diverged: bool
    stall_reason: Optional[str] = None


def bootstrap(p: PairLike, epsilon: float = 1e-3, C: float = 2.0, max_iter: int = 200,
              cap: int = DIVERGENCE_CAP) -> BootstrapTrajectory:
    """Iterate the self-improving decay estimates starting from ``f ∈ F^C``.

    ``j`` is the largest order for which the estimate on the transform side
    (exponent β) is known, ``k`` the same on the function side (exponent α).
    Membership in ``F^C`` gives both up to ``⌊C⌋``; then

        k <- max(k, ⌊j(1-β)/β - 1 - ε⌋),   j <- max(j, ⌊k(1-α)/α - 1 - ε⌋)

    alternate.  Each recorded step is ``(j, k)`` after the ``k`` update.  The
    run diverges once an order reaches ``cap`` (or it is still growing after
    ``max_iter`` rounds) and stalls as soon as a round changes nothing.
    """
    a, b = _pair(p)
    if a <= 0 or b <= 0:
        raise DomainError(f"exponents must be positive, got ({a}, {b})")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if C < 0:
        raise ValueError("C must be nonnegative")
    j = k = math.floor(C)
    if j < 1:
        return BootstrapTrajectory((BootstrapStep(j, k),), False,
                                   "no starting estimate: C < 1")
    steps: list[BootstrapStep] = []
    for _ in range(max_iter):
        k = max(k, math.floor(j * (1 - b) / b - 1 - epsilon))
        step = BootstrapStep(j, k)
        if steps and step == steps[-1]:
            return BootstrapTrajectory(tuple(steps), False, f"fixed point at j={j}, k={k}")
        steps.append(step)
        if max(j, k) >= cap:
            return BootstrapTrajectory(tuple(steps), True)
        j = max(j, math.floor(k * (1 - a) / a - 1 - epsilon))
    grew = len(steps) > 1 and steps[-1].j > steps[-2].j
    return BootstrapTrajectory(tuple(steps), grew,
                               None if grew else "max_iter reached without growth")


def _ratio(a, b):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.minimum(a, b) / (1 - a - b)


def region_a_supremum(grid_n: int = 1000, beta_max: Optional[float] = None,
                      return_argmax: bool = False, levels: int = 10):
    """Supremum of ``min(α,β)/(1-α-β)`` over A by grid search and zooming.

    A ``grid_n × grid_n`` cell-centred grid locates the best admissible
    point; each refinement level regrids a box of four old cells around it at
    64 points per side.  ``beta_max`` restricts the search to ``β < beta_max``.
    """
    if grid_n < 100:
        raise ValueError("grid_n must be at least 100")
    bmax = 1.0 if beta_max is None else float(beta_max)

    def best_in(a0, a1, b0, b1, n):
        a = a0 + (np.arange(n) + 0.5) * (a1 - a0) / n
        b = b0 + (np.arange(n) + 0.5) * (b1 - b0) / n
        A, B = np.meshgrid(a, b, indexing="ij")
        ok = region_a_mask(A, B) & (B < bmax)
        if not ok.any():
            return None
        r = np.where(ok, _ratio(A, B), -np.inf)
        i = np.unravel_index(np.argmax(r), r.shape)
        return float(r[i]), float(A[i]), float(B[i]), (a1 - a0) / n, (b1 - b0) / n

    found = best_in(0.0, 1.0, 0.0, bmax, grid_n)
    if found is None:
        raise ValueError("no grid point of A satisfies the restriction")
    val, a, b, da, db = found
    for _ in range(levels):
        nxt = best_in(max(a - 2 * da, 0.0), min(a + 2 * da, 1.0),
                      max(b - 2 * db, 0.0), min(b + 2 * db, bmax), 64)
        if nxt is None or nxt[0] < val:
            break
        val, a, b, da, db = nxt
    return (val, (a, b)) if return_argmax else val


def region_scan(grid_n: int, lo: float = 0.001, hi: float = 0.999) -> list[tuple]:
    """Rows ``(alpha, beta, in_A, c_lemma or None)`` over a square grid."""
    axis = np.linspace(lo, hi, grid_n)
    rows = []
    for a in axis:
        for b in axis:
            c = c_lemma((a, b)) if a + b < 1 else None
            rows.append((float(a), float(b), region_a_contains((a, b)), c))
    return rows


# ---------------------------------------------------------------------------
# node sets


@dataclass(frozen=True)
class Horizontal:
    height: float = 0.0


@dataclass(frozen=True)
class ThroughOrigin:
    slope: float = 1.0

    def __post_init__(self):
        if self.slope == 0:
            raise SpecError("a line through the origin needs a nonzero slope")


@dataclass(frozen=True)
class Vertical:
    abscissa: float = 0.0


Line = Union[Horizontal, ThroughOrigin, Vertical]


@dataclass(frozen=True)
class Branch:
    """Points ``c·n^exponent`` (with both signs) on one line, ``n ≥ start_index``.

    Horizontal lines carry ``(±c nᵉ, height)``, lines through the origin
    ``±(c nᵉ, slope·c nᵉ)`` and vertical lines ``(abscissa, ±c nᵉ)``.
    """

    line: Line
    c: float
    exponent: float
    start_index: int = 0

    def __post_init__(self):
        if not self.c > 0:
            raise SpecError("branch constant c must be positive")
        if self.start_index not in (0, 1):
            raise SpecError("start_index must be 0 or 1")

    def points(self, N: int) -> list[tuple[float, float]]:
        if self.exponent < 0 and self.start_index == 0:
            raise SpecError("a negative-exponent branch must start at n = 1")
        out = []
        for n in range(self.start_index, N + 1):
            r = self.c * float(n) ** self.exponent
            ln = self.line
            if isinstance(ln, Horizontal):
                out += [(r, ln.height), (-r, ln.height)]
            elif isinstance(ln, ThroughOrigin):
                out += [(r, ln.slope * r), (-r, -ln.slope * r)]
            else:
                out += [(ln.abscissa, r), (ln.abscissa, -r)]
        return out


@dataclass(frozen=True)
class LambdaSpec:
    branches: tuple[Branch, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))

    def validate(self) -> None:
        for br in self.branches:
            if br.exponent < 0 and br.start_index == 0:
                raise SpecError("a negative-exponent branch must start at n = 1")
        slopes = [br.line.slope for br in self.branches if isinstance(br.line, ThroughOrigin)]
        if len(set(slopes)) != len(slopes):
            raise SpecError("lines through the origin must have distinct slopes")

    def to_dict(self) -> dict:
        out = []
        for br in self.branches:
            ln = br.line
            if isinstance(ln, Horizontal):
                line = {"type": "horizontal", "height": ln.height}
            elif isinstance(ln, ThroughOrigin):
                line = {"type": "through_origin", "slope": ln.slope}
            else:
                line = {"type": "vertical", "abscissa": ln.abscissa}
            out.append({"line": line, "c": br.c, "exponent": br.exponent,
                        "start_index": br.start_index})
        return {"branches": out}

    @classmethod
    def from_dict(cls, doc: dict) -> "LambdaSpec":
        branches = []
        for b in doc["branches"]:
            ln = b["line"]
            kind = ln["type"]
            if kind == "horizontal":
                line = Horizontal(float(ln.get("height", 0.0)))
            elif kind == "through_origin":
                line = ThroughOrigin(float(ln["slope"]))
            elif kind == "vertical":
                line = Vertical(float(ln["abscissa"]))
            else:
                raise SpecError(f"unknown line type {kind!r}")
            branches.append(Branch(line, float(b["c"]), float(b["exponent"]),
                                   int(b.get("start_index", 0))))
        return cls(tuple(branches))


def two_parallel_lines(alpha: float, beta: float, c1: float = 1.0, c2: float = 1.0) -> LambdaSpec:
    """``{(±c₁nᵅ, 0)} ∪ {(±c₂nᵝ, 1)}``, ``n ≥ 0``."""
    return LambdaSpec((Branch(Horizontal(0.0), c1, alpha, 0),
                       Branch(Horizontal(1.0), c2, beta, 0)))


def concurrent_lines(a: float, alpha: float, beta: float, c1: float = 1.0, c2: float = 1.0,
                     d: Optional[float] = None, gamma: Optional[float] = None,
                     c3: float = 1.0) -> LambdaSpec:
    """Lines ``y = ax`` (and optionally ``y = dx``) with the horizontal axis.

    Points ``±(c₁n^{-α}, a c₁n^{-α})`` for ``n ≥ 1``, ``(±c₂n^{β/2}, 0)`` for
    ``n ≥ 0`` and, with ``d`` given, ``±(c₃n^{-γ}, d c₃n^{-γ})`` for ``n ≥ 1``.
    """
    branches = [Branch(ThroughOrigin(a), c1, -alpha, 1), Branch(Horizontal(0.0), c2, beta / 2, 0)]
    if d is not None:
        if d == a:
            raise SpecError("the two slanted lines must differ (a != d)")
        branches.append(Branch(ThroughOrigin(d), c3, -(alpha if gamma is None else gamma), 1))
    return LambdaSpec(tuple(branches))


def lambda_points(spec: LambdaSpec, N: int) -> list[EvalPoint]:
    """All branch points with index ``≤ N``, duplicates removed, order kept."""
    if N < 1:
        raise ValueError("N must be at least 1")
    spec.validate()
    seen = {}
    for br in spec.branches:
        for x, y in br.points(N):
            key = (x + 0.0, y + 0.0)  # folds -0.0 into 0.0
            seen.setdefault(key, None)
    return [EvalPoint(x, y) for x, y in seen]


@dataclass(frozen=True)
class VanishingReport:
    points_checked: int
    max_abs: float
    worst_point: Optional[EvalPoint]
    max_error: float = 0.0


def vanishing_check(m: ParabolaMeasure, spec: LambdaSpec, N: int, tol: Optional[float] = None,
                    workers: Optional[int] = None) -> VanishingReport:
    """Largest ``|μ̂|`` over the first ``N`` indices of every branch."""
    pts = lambda_points(spec, N)
    res = evaluate_points(m, pts, tol, workers)
    mags = [abs(r.value) for r in res]
    i = int(np.argmax(mags)) if mags else 0
    return VanishingReport(len(pts), float(mags[i]) if mags else 0.0,
                           pts[i] if pts else None,
                           float(max((r.error for r in res), default=0.0)))


# ---------------------------------------------------------------------------
# gap criterion and decay exponents


def ns_margin(u: Callable[[np.ndarray], np.ndarray], p: float, tail: int = 10) -> float:
    """Finite surrogate of ``limsup |u_j|^{p-1}(u_{j+1} - u_j)``.

    The maximum is taken over the last ``tail`` indices of the prefix
    ``j = 1 .. 100·tail``.
    """
    if tail < 10:
        raise ValueError("tail must be at least 10")
    if not p > 1:
        raise ValueError("p must exceed 1")
    n = 100 * tail
    j = np.arange(n - tail, n + 1, dtype=float)
    uj = np.asarray(u(j), dtype=float)
    gaps = np.abs(uj[:-1]) ** (p - 1) * np.diff(uj)
    return float(gaps.max())


def power_admissible(p: PairLike) -> bool:
    """``α + β < 1``: power nodes meet the gap criterion for some dual pair of exponents."""
    a, b = _pair(p)
    if a <= 0 or b <= 0:
        raise DomainError(f"exponents must be positive, got ({a}, {b})")
    return a + b < 1


def power_witness(p: PairLike, p_max: float = 1e12) -> Optional[float]:
    """An exponent ``p > 1`` with ``αp < 1`` and ``βp/(p-1) < 1``, found by bisection.

    The two conditions are monotone in ``p`` (the first fails above some
    point, the second below some point), so each boundary is located by
    bisection and the midpoint of the surviving interval is checked directly.
    """
    a, b = _pair(p)

    def first(x):
        return a * x < 1

    def second(x):
        return b * x / (x - 1) < 1

    lo_edge = np.nextafter(1.0, 2.0)
    if not first(lo_edge) or not second(p_max):
        return None
    # sup of the set where first() holds
    hi = p_max
    if not first(hi):
        lo = lo_edge
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            lo, hi = (mid, hi) if first(mid) else (lo, mid)
        hi = lo
    # inf of the set where second() holds
    lo2, hi2 = lo_edge, p_max
    if not second(lo2):
        for _ in range(200):
            mid = 0.5 * (lo2 + hi2)
            lo2, hi2 = (lo2, mid) if second(mid) else (mid, hi2)
        lo2 = hi2
    cand = 0.5 * (lo2 + hi)
    return cand if first(cand) and second(cand) else None


def decay_slope_fit(values: Iterable[tuple[float, float]]) -> float:
    """Least-squares slope of ``log|value|`` against ``log x``."""
    arr = np.asarray(list(values), dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("expected (x, magnitude) pairs")
    x, mag = arr[:, 0], arr[:, 1]
    if x.size and np.all(x == x[0]):
        raise DegenerateFit("all abscissae are equal")
    if x.size < 8:
        raise ValueError("need at least 8 samples")
    if np.any(x <= 0) or np.any(mag <= 0):
        raise ValueError("abscissae and magnitudes must be positive")
    if x.max() < 4 * x.min():
        raise ValueError("samples must span at least two octaves")
    slope, _ = np.polyfit(np.log(x), np.log(mag), 1)
    return float(slope)
