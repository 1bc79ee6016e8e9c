from __future__ import annotations

import cmath
import csv
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hup.density import (ComplexGaussian, Gaussian, OddBump, PhaseModulated, SmoothBump,
                         Translated, fourier_transform_1d, moment)
from hup.errors import DegenerateEta
from hup.extension import (GRID_COLUMNS, EvalPoint, ParabolaMeasure, evaluate_grid,
                           evaluate_points, extension_closed_form, extension_gaussian_closed_form,
                           extension_quadrature, extension_via_fy, fy_hat, schrodinger_residual,
                           write_grid_csv)

from . import oracles

GAUSS = ParabolaMeasure(Gaussian())
BUMP = ParabolaMeasure(SmoothBump(0.0, 1.0))


def closed(x, y):
    return extension_gaussian_closed_form(1.0, (x, y))


# --- worked values ----------------------------------------------------------

def test_mass_at_origin():
    assert extension_quadrature(GAUSS, (0, 0), 1e-13) == pytest.approx(1.0, abs=1e-12)
    assert closed(0, 0) == 1


def test_horizontal_value_is_self_dual():
    assert extension_quadrature(GAUSS, (1, 0), 1e-13) == pytest.approx(math.exp(-math.pi), abs=1e-12)
    assert closed(1, 0) == pytest.approx(0.0432139, abs=1e-7)


def test_value_at_unit_height():
    target = (1 + 2j) ** -0.5
    assert extension_quadrature(GAUSS, (0, 1), 1e-11) == pytest.approx(target, abs=1e-10)
    assert closed(0, 1) == pytest.approx(target, abs=1e-15)
    assert abs(closed(0, 1)) == pytest.approx(5 ** -0.25, abs=1e-15)
    assert abs(closed(0, 1)) == pytest.approx(0.66874, abs=1e-5)


def test_closed_form_against_riemann_oracle():
    for x, y in [(0.3, -0.7), (-1.2, 1.9), (2.0, 0.05)]:
        ref = oracles.riemann_extension(oracles.gaussian, x, y, -9, 9, 800_001)
        assert abs(closed(x, y) - ref) <= 1e-11


def test_closed_form_width_and_validation():
    w = 0.6
    ref = oracles.riemann_extension(lambda t: np.exp(-np.pi * t * t / w ** 2), 0.8, 0.4, -7, 7)
    assert abs(extension_gaussian_closed_form(w, (0.8, 0.4)) - ref) <= 1e-11
    with pytest.raises(ValueError):
        extension_gaussian_closed_form(0.0, (0, 0))


@pytest.mark.parametrize("d", [Gaussian(0.8, 0.4, -0.3, 1 - 1j), ComplexGaussian(1.1 + 0.3j, 0.2j, 0.4),
                               Translated(PhaseModulated(Gaussian(1.2), 0.5, 0.1), -0.6)])
def test_general_closed_form_against_quadrature(d):
    m = ParabolaMeasure(d)
    for p in [(0.0, 0.0), (1.3, -0.4), (-2.0, 1.5)]:
        assert abs(extension_closed_form(m, p) - extension_quadrature(m, p, 1e-12)) <= 1e-11


def test_closed_form_rejects_bump():
    with pytest.raises(ValueError):
        extension_closed_form(BUMP, (0, 1))


def test_bump_against_riemann_oracle():
    for x, y in [(0.5, 0.5), (-3.0, 2.0), (10.0, -4.0)]:
        ref = oracles.riemann_extension(lambda t: oracles.bump(t), x, y, -1, 1, 1_000_001)
        assert abs(extension_quadrature(BUMP, (x, y), 1e-12) - ref) <= 1e-10


def test_full_output_reports_error():
    res = extension_quadrature(BUMP, (1.0, 1.0), 1e-9, full_output=True)
    assert 0 < res.error <= 1e-9


# --- f_y route --------------------------------------------------------------

def test_fy_route_gaussian_at_unit_height():
    assert extension_via_fy(GAUSS, (0, 1), 1e-11) == pytest.approx((1 + 2j) ** -0.5, abs=1e-10)


@pytest.mark.parametrize("eta", [0.0, 1e-13, -5e-13])
def test_fy_route_degenerate_height(eta):
    with pytest.raises(DegenerateEta):
        extension_via_fy(GAUSS, (0.3, eta))
    with pytest.raises(DegenerateEta):
        fy_hat(GAUSS, eta, 0.0)


@pytest.mark.parametrize("d", [Gaussian(), SmoothBump(0.0, 0.7), OddBump(1.0)])
@pytest.mark.parametrize("x", [-2.0, 0.5, 1.7])
def test_unit_height_modulus_even_and_odd(d, x):
    # for densities of definite parity |f̂₁| is even, so the sign of the argument is immaterial
    m = ParabolaMeasure(d)
    lhs = abs(extension_quadrature(m, (x, 1.0), 1e-11))
    rhs = 2 ** -0.5 * abs(fy_hat(m, 1.0, -x / 2, 1e-11).value)
    assert abs(lhs - rhs) <= 1e-9


@pytest.mark.parametrize("x", [-1.5, 0.4, 2.2])
def test_unit_height_modulus_general(x):
    m = ParabolaMeasure(SmoothBump(0.35, 0.8))
    lhs = abs(extension_quadrature(m, (x, 1.0), 1e-11))
    rhs = 2 ** -0.5 * abs(fy_hat(m, 1.0, x / 2, 1e-11).value)
    assert abs(lhs - rhs) <= 1e-9


def test_fy_hat_matches_direct_integral_of_chirped_dual():
    # f_y for the unit Gaussian is e^{-πt²}e^{iπt²/(2y)}, a Gaussian with complex variance
    y, s = 0.7, 0.45
    got = fy_hat(GAUSS, y, s, 1e-12).value
    ref = oracles.riemann_transform(lambda t: np.exp(-np.pi * t * t + 1j * np.pi * t * t / (2 * y)),
                                    s, -9, 9, 800_001)
    assert abs(got - ref) <= 1e-10


def test_fy_route_asymmetric_density_against_oracle():
    m = ParabolaMeasure(SmoothBump(0.35, 0.8))
    for x, y in [(0.9, 0.6), (-1.4, -1.1)]:
        ref = oracles.riemann_extension(lambda t: oracles.bump(t, 0.35, 0.8), x, y, -0.45, 1.15,
                                        1_000_001)
        assert abs(extension_via_fy(m, (x, y), 1e-10) - ref) <= 2e-10


points = st.tuples(st.floats(min_value=-3, max_value=3),
                   st.floats(min_value=0.1, max_value=2), st.booleans())


@settings(max_examples=24)
@given(st.sampled_from([GAUSS, BUMP, ParabolaMeasure(SmoothBump(-0.2, 0.6))]), points)
def test_route_agreement(m, p):
    x, y, neg = p
    y = -y if neg else y
    a = extension_quadrature(m, (x, y), 1e-10, full_output=True)
    b = extension_via_fy(m, (x, y), 1e-10, full_output=True)
    assert abs(a.value - b.value) <= 2 * (a.error + b.error)


# --- structural properties --------------------------------------------------

@given(st.floats(min_value=-6, max_value=6))
def test_horizontal_slice_is_transform(x):
    tol = 1e-10
    for m in (BUMP, ParabolaMeasure(OddBump(0.7))):
        assert abs(extension_quadrature(m, (x, 0.0), tol) - fourier_transform_1d(m.density, x, tol)) <= 2 * tol


@given(st.floats(min_value=-8, max_value=8), st.floats(min_value=-8, max_value=8))
def test_bounded_by_mass(x, y):
    tol = 1e-9
    for m in (GAUSS, BUMP):
        assert abs(extension_quadrature(m, (x, y), tol)) <= moment(m.density, 0, tol).value + tol


def test_conjugate_symmetry_for_real_even_density():
    # real g: μ̂(-ξ,-η) = conj μ̂(ξ,η)
    for p in [(0.4, 1.3), (-2.1, 0.2)]:
        a = extension_quadrature(BUMP, p, 1e-11)
        b = extension_quadrature(BUMP, (-p[0], -p[1]), 1e-11)
        assert abs(a - b.conjugate()) <= 2e-11


# --- Schrödinger residual ---------------------------------------------------

def test_residual_small_at_reference_point():
    assert abs(schrodinger_residual(closed, (0.5, 0.5), 1e-3)) < 1e-4


def test_residual_second_order_halving():
    r1 = abs(schrodinger_residual(closed, (0.5, 0.5), 1e-2))
    r2 = abs(schrodinger_residual(closed, (0.5, 0.5), 5e-3))
    assert 3.5 <= r1 / r2 <= 4.5


def test_residual_leading_constant_at_origin():
    # Taylor expansion of the stencil for the unit Gaussian at the origin gives h²(π² - 5π)
    c = math.pi ** 2 - 5 * math.pi
    for h in (1e-2, 3e-3, 1e-3):
        r = schrodinger_residual(closed, (0, 0), h)
        assert abs(r / h ** 2 - c) <= 0.01 * abs(c)


def test_residual_derived_bound_everywhere():
    # |residual| ≤ 6 h² over a box: the O(h²) law with an explicit constant
    rng = np.random.default_rng(11)
    h = 1e-3
    worst = max(abs(schrodinger_residual(closed, tuple(p), h)) / h ** 2
                for p in rng.uniform(-2, 2, (64, 2)))
    assert worst <= 6.0


@pytest.mark.xfail(strict=True, reason="stencil truncation at h=1e-3 is 5.8e-6 at the origin")
def test_residual_below_1e6_at_every_point():
    rng = np.random.default_rng(12)
    pts = [(0.0, 0.0)] + [tuple(p) for p in rng.uniform(-2, 2, (16, 2))]
    assert max(abs(schrodinger_residual(closed, p, 1e-3)) for p in pts) <= 1e-6


def test_residual_on_quadrature_field():
    r = schrodinger_residual(BUMP, (0.3, 0.4), 1e-2, tol=1e-13)
    r2 = schrodinger_residual(BUMP, (0.3, 0.4), 5e-3, tol=1e-13)
    assert 3.5 <= abs(r) / abs(r2) <= 4.5


def test_residual_rejects_bad_step():
    with pytest.raises(ValueError):
        schrodinger_residual(closed, (0, 0), 0.0)


# --- batch evaluation -------------------------------------------------------

def test_threaded_evaluation_matches_serial():
    pts = [EvalPoint(x, y) for x in (-1.0, 0.0, 2.0) for y in (-0.5, 0.7)]
    m = ParabolaMeasure(SmoothBump(0.1, 0.8))
    serial = evaluate_points(m, pts, 1e-10, workers=1)
    threaded = evaluate_points(m, pts, 1e-10, workers=4)
    assert [r.value for r in serial] == [r.value for r in threaded]


def test_ghat_cache_built_once_under_threads():
    from concurrent.futures import ThreadPoolExecutor
    m = ParabolaMeasure(SmoothBump(0.0, 0.5))
    with ThreadPoolExecutor(4) as pool:
        tabs = list(pool.map(lambda _: m.ghat()[0], range(8)))
    assert all(t is tabs[0] for t in tabs)


def test_cached_ghat_agrees_with_transform():
    m = ParabolaMeasure(SmoothBump(0.2, 0.6))
    ghat, err = m.ghat(1e-10)
    for x in np.random.default_rng(2).uniform(-30, 30, 20):
        assert abs(ghat(x) - fourier_transform_1d(m.density, x, 1e-12)) <= 1e-9


def test_grid_csv(tmp_path):
    rows = evaluate_grid(GAUSS, [-1.0, 0.0, 1.0], [0.0, 0.5], 1e-10)
    assert len(rows) == 6
    path = tmp_path / "grid.csv"
    write_grid_csv(rows, path, "unit gaussian")
    lines = path.read_text().splitlines()
    assert lines[0] == "# unit gaussian"
    body = list(csv.reader(lines[1:]))
    assert tuple(body[0]) == GRID_COLUMNS
    for (x, y, re_, im_, ab, err) in ([float(v) for v in r] for r in body[1:]):
        v = closed(x, y)
        assert abs(complex(re_, im_) - v) <= 1e-10
        assert ab == pytest.approx(abs(complex(re_, im_)))
        assert err >= 0
