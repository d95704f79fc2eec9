import math
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hparabola import quadrature as quad
from hparabola.family import Cutoff, Family, RegionSpec
from hparabola.quadrature import QuadratureConfig
from hparabola.sds import SdsRegion

CFG = QuadratureConfig()


@pytest.mark.parametrize("deg", range(0, 23))
def test_single_panel_is_exact_for_polynomials(deg):
    # GK15 integrates degree <= 22 exactly on one panel
    res = quad.integrate(lambda x: x ** deg, 0.0, 1.0, QuadratureConfig(rel_tol=1e-14, abs_tol=1e-300))
    assert res.value == pytest.approx(1.0 / (deg + 1), rel=1e-14)


def test_rule_weights():
    assert quad.W_KRONROD.sum() == pytest.approx(2.0, abs=1e-15)
    assert quad.W_GAUSS.sum() == pytest.approx(2.0, abs=1e-15)
    assert np.allclose(quad.NODES, -quad.NODES[::-1])


@pytest.mark.parametrize("f,a,b,exact", [
    (lambda x: np.exp(-x * x), -math.inf, math.inf, math.sqrt(math.pi)),
    (lambda x: 1.0 / (1.0 + x * x), 0.0, math.inf, 0.5 * math.pi),
    (lambda x: np.exp(x), -math.inf, 0.0, 1.0),
    (lambda x: np.log(x), 0.0, 1.0, -1.0),
    (lambda x: np.sin(x), math.pi, 0.0, -2.0),
])
def test_known_integrals(f, a, b, exact):
    res = quad.integrate(f, a, b)
    assert res.converged
    assert res.value == pytest.approx(exact, rel=1e-9)


def test_unresolved_singularity_is_reported():
    # 60 halvings leave ~sqrt(2^-60) of error at an inverse square root end
    res = quad.integrate(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
    assert not res.converged
    assert abs(res.value - 2.0) <= res.error_estimate


def test_zero_length_range():
    assert quad.integrate(np.cos, 1.0, 1.0) == quad.OracleResult(0.0, 0.0, 0, True)


@given(st.floats(0.5, 20.0), st.floats(-2.0, 2.0))
def test_converged_error_within_tolerance(k, a):
    res = quad.integrate(lambda x: np.cos(k * x), a, a + 3.0)
    exact = (math.sin(k * (a + 3.0)) - math.sin(k * a)) / k
    assert res.converged
    assert abs(res.value - exact) <= CFG.tolerance(exact) + 1e-13
    assert res.error_estimate <= CFG.tolerance(res.value)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_depth=3)
    t = CFG.tightened(0.1)
    assert t.rel_tol == pytest.approx(1e-11) and t.cutoff_schedule == CFG.cutoff_schedule


def test_rows_with_large_heights():
    # inner integral of (x^2 + y^2)^-1.5 over x in (-inf, -1]; its feature width grows with |y|
    ys = np.array([1.0, 10.0, 1e3, 1e5])
    lo, hi = np.full_like(ys, -np.inf), np.full_like(ys, -1.0)
    v, e, ok = quad.integrate_rows(lambda x, y: (x * x + y * y) ** -1.5, ys, lo, hi, 1e-12, 1e-300,
                                   scale=np.maximum(1.0, ys))
    exact = (1.0 - 1.0 / np.sqrt(1.0 + ys * ys)) / ys ** 2
    assert ok
    assert np.allclose(v, exact, rtol=1e-10, atol=0.0)


def test_iterated_integral():
    res = quad.integrate_2d(lambda x, y: x * y, 0.0, 1.0, lambda y: np.zeros_like(y), lambda y: y)
    assert res.value == pytest.approx(1.0 / 8.0, rel=1e-13)


# frozen oracle values, each also confirmed by an elementary formula or a second route
def test_frozen_areas():
    assert quad.quad_area_hyp(RegionSpec(Family.D, 0.6, Cutoff("lineal", 0.9))).value == pytest.approx(
        2.086611689816947, rel=1e-10)
    assert quad.quad_area_hyp(RegionSpec(Family.A, 0.6)).value == pytest.approx(math.pi - 2.0 * math.atan(4.0 / 3.0), rel=1e-10)


def test_frozen_lengths():
    arc = quad.quad_len_hyp(quad.band_arc(0.6, 0.5)).value
    # hypercycle arc = cosh(radius) * axial length
    assert arc == pytest.approx(math.atanh(0.5) / 0.8, rel=1e-12)
    assert arc == pytest.approx(0.6866326804175685, rel=1e-12)
    assert quad.quad_len_horocycle_boundary(1.0 / 3.0).value == pytest.approx(2.0, rel=1e-12)
    assert quad.quad_sds_circle_length(2.0).value == pytest.approx(7.2551974569368705, rel=1e-10)


def test_frozen_half_plane():
    assert quad.quad_area_bph("D-E", 0.6).value == pytest.approx(0.46027922916005465, rel=1e-9)
    assert quad.quad_area_bph("D-V", 0.6).value == pytest.approx(1.5, rel=1e-12)
    assert quad.quad_area_bph("E-V", 0.6).value == pytest.approx(1.0397207708399454, rel=1e-9)
    assert quad.quad_len_bph_diff_D_minus_E(0.6, 50.0).value == pytest.approx(0.6873825829053946, rel=1e-9)


def test_frozen_ratio():
    ratio, outside, inside = quad.quad_band_ratio(0.9)
    assert ratio == pytest.approx(0.5710438829362722, rel=1e-9)
    assert outside.converged and inside.converged


@pytest.mark.parametrize("tag,eta", [("W", 0.5), ("E", 0.5), ("Z", None), ("W", 0.9), ("E", -2.0)])
def test_integration_order_interchange(tag, eta):
    r = SdsRegion(tag, 0.6, eta)
    xy = quad.quad_area_sds(r, order="xy")
    yx = quad.quad_area_sds(r, order="yx")
    assert xy.converged and yx.converged
    assert xy.value == pytest.approx(yx.value, rel=1e-9)


def test_self_consistency():
    loose = quad.quad_area_sds(SdsRegion("E", 0.6, 0.5), QuadratureConfig(rel_tol=1e-8, abs_tol=1e-10)).value
    tight = quad.quad_area_sds(SdsRegion("E", 0.6, 0.5), QuadratureConfig(rel_tol=1e-12, abs_tol=1e-14)).value
    assert loose == pytest.approx(tight, rel=1e-8)


def test_copolar_pieces_add_up():
    eta = 0.5
    whole = quad.quad_area_sds(SdsRegion("band_minus_parabola", 0.6, eta)).value
    parts = [quad.quad_area_sds(SdsRegion(t, 0.6, e)).value for t, e in (("W", eta), ("Z", None), ("E", eta))]
    assert whole == pytest.approx(2.0 * (parts[0] + parts[1] - parts[2]), rel=1e-9)


def test_monte_carlo_is_only_rough():
    est, se = quad.monte_carlo_area(lambda x, y: x * x + y * y <= 0.25, lambda x, y: np.ones_like(x),
                                    (-0.5, 0.5, -0.5, 0.5), n=100_000, seed=1)
    assert abs(est - math.pi / 4.0) < 5.0 * se


def test_limit_trend_of_constant():
    t = quad.limit_trend(lambda eta: 2.0)
    assert t.values == (2.0,) * 6
    assert t.monotone and t.final_increment == 0.0
    assert t.settles_at(2.0)
    assert not t.settles_at(2.1)


def test_limit_trend_of_shrinking_length():
    t = quad.limit_trend(lambda eta: quad.quad_len_M(0.6, eta).value)
    assert t.monotone
    assert all(d < 0.0 for d in t.increments)
    assert t.last < 1e-6


def test_area_trend_decays_linearly():
    def diff(eta):
        cut = Cutoff("lineal", eta)
        return (quad.quad_area_hyp(RegionSpec(Family.BAND_SEGMENT, 0.6, cut)).value
                - quad.quad_area_hyp(RegionSpec(Family.E, 0.6, cut)).value)

    t = quad.limit_trend(diff)
    assert t.values[-1] == pytest.approx(0.5819964807538032, rel=1e-9)
    assert all(r == pytest.approx(0.1, abs=0.02) for r in t.decay_ratios)


def test_oracle_does_not_import_the_closed_forms():
    code = ("import sys, hparabola.quadrature; "
            "sys.exit(1 if 'hparabola.closed_forms' in sys.modules else 0)")
    assert subprocess.run([sys.executable, "-c", code]).returncode == 0
