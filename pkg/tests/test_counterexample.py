from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hup.counterexample import (HTransform, build_counterexample, counterexample_ghat,
                                counterexample_lambda, g_mass, h_identity_sides, h_transform_ft,
                                h_value, line_points, rigidity_defect, three_line_rigidity,
                                verify_h_identity)
from hup.density import Gaussian, OddBump, SampleTable, SmoothBump, fourier_transform_1d, moment
from hup.errors import DegenerateEta, SpecError
from hup.extension import ParabolaMeasure, evaluate_points, extension_quadrature
from hup.uniqueness import lambda_points, vanishing_check

from . import oracles

GAUSS = ParabolaMeasure(Gaussian())


@pytest.fixture(scope="module")
def cx():
    return build_counterexample(0.5, 1.0, 1.0)


# --- H transform ------------------------------------------------------------

@given(st.floats(max_value=0.0, min_value=-1e6), st.sampled_from([-2.0, 0.5, 1.0, 3.0]))
def test_h_vanishes_on_nonpositive_axis(s, a):
    assert h_value(HTransform(GAUSS, a), s) == 0
    assert HTransform(ParabolaMeasure(SmoothBump(0.2, 0.4)), a)(s) == 0


def test_h_gaussian_value():
    assert h_value(HTransform(GAUSS, 1.0), 1.0) == pytest.approx(-math.exp(-math.pi), abs=1e-15)


def test_h_vectorised():
    H = HTransform(GAUSS, 0.7)
    s = np.array([-1.0, 0.0, 0.3, 2.0])
    v = h_value(H, s)
    assert v.shape == (4,) and v[0] == 0 and v[1] == 0
    assert v[2] == pytest.approx(h_value(H, 0.3))


def test_h_zero_for_odd_psi(cx):
    s = np.linspace(0.001, 1.0, 200)
    assert np.max(np.abs(h_value(HTransform(cx, 1.0), s))) <= 1e-15


def test_h_slope_validation():
    with pytest.raises(ValueError):
        HTransform(GAUSS, 0.0)


def test_h_transform_against_riemann_oracle():
    # after s = t², 2t·H(t²) = ĝ(t)e^{-πit/a} + ĝ(-t)e^{πit/a}, written out directly here
    H = HTransform(GAUSS, 1.0)
    sigma = -0.3
    t = np.linspace(0.0, 7.0, 700_001)
    f = 2 * oracles.gaussian(t) * np.cos(np.pi * t) * np.exp(-2j * np.pi * sigma * t * t)
    ref = complex((t[1] - t[0]) * (f.sum() - 0.5 * (f[0] + f[-1])))
    assert abs(h_transform_ft(H, sigma) - ref) <= 1e-10


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_h_identity_gaussian(x):
    rep = h_identity_sides(GAUSS, 1.0, x)
    assert rep.discrepancy < 1e-6
    assert rep.discrepancy <= 2 * rep.error_budget + 1e-13


@pytest.mark.parametrize("a,x", [(-1.5, 0.7), (0.4, -1.2), (2.0, 0.3)])
def test_h_identity_bump(a, x):
    m = ParabolaMeasure(SmoothBump(0.25, 0.6))
    rep = h_identity_sides(m, a, x)
    assert rep.discrepancy <= 2 * rep.error_budget + 1e-12


def test_h_identity_degenerate():
    with pytest.raises(DegenerateEta):
        verify_h_identity(GAUSS, 1.0, 0.0)
    with pytest.raises(ValueError):
        verify_h_identity(GAUSS, 0.0, 1.0)


def test_h_zero_iff_restriction_zero(cx):
    xs = np.linspace(-2.0, 2.0, 16) + 0.037
    odd_h = max(abs(h_transform_ft(HTransform(cx, 1.0), -1 / (4 * x))) for x in xs)
    odd_line = max(abs(r.value) for r in evaluate_points(cx, line_points(1.0, xs), 1e-11))
    assert odd_h <= 1e-12 and odd_line <= 1e-9
    g_h = min(abs(h_transform_ft(HTransform(GAUSS, 1.0), -1 / (4 * x))) for x in xs)
    g_line = min(abs(extension_quadrature(GAUSS, p, 1e-12)) for p in line_points(1.0, xs))
    assert g_h > 1e-3 and g_line > 1e-3


# --- the example ------------------------------------------------------------

def test_transform_of_example_is_modulated_odd_bump(cx):
    assert cx.cached_ghat(0.0) == 0
    g = cx.density
    for x in (-0.45, -0.1, 0.2, 0.49, 0.7):
        want = np.exp(1j * np.pi * x) * oracles.odd_bump(x, 0.5)
        assert abs(fourier_transform_1d(g, x, 1e-10) - want) <= 1e-9


def test_example_is_not_null(cx):
    mass = g_mass(cx)
    psi_l1 = moment(OddBump(0.5), 0).value
    assert mass > 0.1 * psi_l1 > 0
    assert mass > 0.19


def test_example_vanishes_on_short_node_set(cx):
    rep = vanishing_check(cx, counterexample_lambda(1.0, 1.0), 12, 1e-11)
    assert rep.points_checked == len(lambda_points(counterexample_lambda(1.0, 1.0), 12))
    assert rep.max_abs < 1e-9


def test_example_second_line_is_not_small(cx):
    xs = np.array([s * n ** -0.25 for n in range(1, 9) for s in (1, -1)])
    vals = [abs(r.value) for r in evaluate_points(cx, line_points(-1.0, xs), 1e-10)]
    assert max(vals) >= 1e-3


def test_example_sign_flip_covariance():
    g1 = build_counterexample(0.3, 1.0, 1.0, 1.0).density
    g2 = build_counterexample(0.3, 1.0, 1.0, -1.0).density
    t = np.linspace(-40, 40, 401)
    np.testing.assert_allclose(g2(t), -g1(t), atol=1e-12)


def test_example_support_check():
    with pytest.raises(SpecError):
        build_counterexample(1.0, 1.0, 1.0)
    with pytest.raises(SpecError):
        build_counterexample(0.5, 0.0, 1.0)
    with pytest.raises(SpecError):
        build_counterexample(0.0, 1.0, 1.0)


def test_example_exports_to_sample_csv(cx, tmp_path):
    from hup.density import read_sample_csv, write_sample_csv
    assert isinstance(cx.density, SampleTable)
    write_sample_csv(cx.density, tmp_path / "g.csv")
    back = read_sample_csv(tmp_path / "g.csv", order=cx.density.order)
    t = np.linspace(-10, 10, 33)
    np.testing.assert_allclose(back(t), cx.density(t), atol=1e-15)


# --- rigidity ---------------------------------------------------------------

def test_rigidity_zero_psi():
    zero = SampleTable(np.linspace(-1, 1, 5), np.zeros(5))
    assert three_line_rigidity(zero, 1.0, 2.0, np.linspace(-1, 1, 41)) == 0


def test_rigidity_defect_example():
    psi = OddBump(1.0)
    got = rigidity_defect(psi, 1.0, 0.5)
    assert got == pytest.approx(2 * abs(math.sin(math.pi / 2)) * abs(psi(0.5)), rel=1e-14)


@given(st.floats(min_value=-0.99, max_value=0.99), st.floats(min_value=-3, max_value=3))
def test_rigidity_defect_formula(x, rho):
    psi = OddBump(1.0)
    want = 2 * abs(math.sin(math.pi * rho * x)) * abs(psi(x))
    assert float(rigidity_defect(psi, rho, x)) == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_rigidity_zero_set():
    psi = OddBump(2.0)
    x = np.arange(-3, 4) / 2.0
    assert np.all(rigidity_defect(psi, 2.0, x) <= 1e-15)
    # a = 1, d = 1/3 gives rho = 2
    assert three_line_rigidity(psi, 1.0, 1 / 3, x) <= 1e-15
    assert three_line_rigidity(psi, 1.0, 1 / 3, x + 0.25) > 0.1


def test_rigidity_argument_checks():
    with pytest.raises(SpecError):
        three_line_rigidity(OddBump(1), 1.0, 1.0, [0.3])
    with pytest.raises(SpecError):
        three_line_rigidity(OddBump(1), 0.0, 1.0, [0.3])
    assert three_line_rigidity(OddBump(1), 1.0, 2.0, []) == 0.0


def test_ghat_constructor():
    gh = counterexample_ghat(0.5, 2.0)
    x = 0.3
    assert gh(x) == pytest.approx(np.exp(1j * np.pi * x / 2) * oracles.odd_bump(x, 0.5), abs=1e-16)
