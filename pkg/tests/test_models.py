import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hparabola.models import (
    BckPoint, BphPoint, DomainError, HomogeneousPoint, arcosh1p, bck_distance, bck_to_bph, bph_area_density,
    bph_distance, bph_to_bck, canonical_scale, hyp_arclength_integrand, hyp_area_density, hyp_density_xy,
    sds_density_xy,
)
from strategies import disk_points


def test_distance_examples():
    o = BckPoint(0.0, 0.0)
    assert bck_distance(o, o) == 0.0
    assert bck_distance(o, BckPoint(0.5, 0.0)) == pytest.approx(0.5493061443340549, abs=1e-15)
    p, q = BckPoint(0.3, 0.4), BckPoint(-0.3, 0.4)
    assert bck_distance(p, q) == pytest.approx(2.0 * bck_distance(BckPoint(0.0, 0.4), p), rel=1e-13)


def test_chart_map_examples():
    q = bck_to_bph(BckPoint(0.0, 0.0))
    assert (q.x, q.y) == (0.0, 1.0)
    f = bck_to_bph(BckPoint(0.0, 0.36 / 1.64))
    assert f.x == 0.0 and f.y == pytest.approx(1.25, abs=1e-15)
    q = bck_to_bph(BckPoint(0.3, 0.4))
    assert q.x == pytest.approx(0.5, abs=1e-15)
    assert q.y == pytest.approx(math.sqrt(0.75) / 0.6, abs=1e-15)
    back = bph_to_bck(BphPoint(0.5, math.sqrt(0.75) / 0.6))
    assert (back.x, back.y) == pytest.approx((0.3, 0.4), abs=1e-15)
    assert bph_to_bck(BphPoint(0.0, 1.0)) == BckPoint(0.0, 0.0)
    assert bph_to_bck(BphPoint(0.0, 1e7)).y == pytest.approx(1.0, abs=1e-13)


def test_half_plane_distance_examples():
    p = BphPoint(0.3, 0.7)
    assert bph_distance(p, p) == 0.0
    assert bph_distance(BphPoint(0.0, 1.0), BphPoint(0.0, math.e)) == pytest.approx(1.0, abs=1e-15)


def test_density_examples():
    assert hyp_area_density(BckPoint(0.0, 0.0)) == 1.0
    assert hyp_area_density(BckPoint(0.6, 0.0)) == pytest.approx(1.953125, rel=1e-15)
    assert hyp_area_density(BckPoint(0.0, 0.8)) == pytest.approx(0.36 ** -1.5, rel=1e-14)
    assert bph_area_density(BphPoint(5.0, 1.0)) == 1.0
    assert bph_area_density(BphPoint(0.0, 2.0)) == 0.25
    assert sds_density_xy(math.sqrt(2.0), 0.0) == pytest.approx(1.0, rel=1e-15)
    assert sds_density_xy(2.0, 0.0) == pytest.approx(3.0 ** -1.5, rel=1e-15)


def test_arclength_integrand_examples():
    assert hyp_arclength_integrand(BckPoint(0.0, 0.0), (1.0, 0.0)) == 1.0
    assert hyp_arclength_integrand(BckPoint(0.0, 0.5), (0.0, 1.0)) == pytest.approx(1.0 / 0.75, rel=1e-15)
    C, t = 0.6, 0.5
    pos = BckPoint(C * math.sqrt(1 - t * t), t)
    vel = (-C * t / math.sqrt(1 - t * t), 1.0)
    assert hyp_arclength_integrand(pos, vel) == pytest.approx(1.0 / (0.8 * (1 - t * t)), rel=1e-14)


@pytest.mark.parametrize("x,y", [(1.0, 0.0), (0.8, 0.6), (2.0, 0.0), (math.nan, 0.0)])
def test_points_outside_disk_rejected(x, y):
    with pytest.raises(DomainError):
        BckPoint(x, y)


def test_half_plane_needs_positive_height():
    with pytest.raises(DomainError):
        BphPoint(0.0, 0.0)


def test_arcosh1p_small_arguments():
    assert arcosh1p(0.0) == 0.0
    assert arcosh1p(1e-20) == pytest.approx(math.sqrt(2e-20), rel=1e-12)
    with pytest.raises(DomainError):
        arcosh1p(-1e-3)


def test_homogeneous_canonical_form():
    a = HomogeneousPoint((0.0, -2.0, -2.0))
    b = HomogeneousPoint((0.0, 0.5, 0.5))
    assert a.coords == b.coords == (0.0, 1.0, 1.0)
    assert HomogeneousPoint((0.0, 1.0, -0.0)).coords[2] == 0.0
    assert math.copysign(1.0, canonical_scale(np.array([0.0, 1.0, -0.0]))[2]) == 1.0
    with pytest.raises(DomainError):
        HomogeneousPoint((0.0, 1.0, 0.0)).to_affine()


@given(disk_points(max_r2=1.0 - 1e-9))
def test_round_trip(p):
    back = bph_to_bck(bck_to_bph(p))
    assert back.x == pytest.approx(p.x, abs=1e-12)
    assert back.y == pytest.approx(p.y, abs=1e-12)


@given(disk_points(), disk_points())
def test_distance_agrees_across_charts(p, q):
    d = bck_distance(p, q)
    assert abs(d - bph_distance(bck_to_bph(p), bck_to_bph(q))) <= 1e-10


@given(disk_points(), disk_points())
def test_distance_symmetric(p, q):
    assert bck_distance(p, q) == pytest.approx(bck_distance(q, p), abs=1e-13)


@given(st.floats(1e-6, 1.0 - 1e-6))
def test_axis_gauge(t):
    o = BckPoint(0.0, 0.0)
    assert bck_distance(o, BckPoint(t, 0.0)) == pytest.approx(math.atanh(t), abs=1e-13)
    assert bck_distance(o, BckPoint(0.0, t)) == pytest.approx(math.atanh(t), abs=1e-13)


@given(disk_points(), disk_points(), disk_points())
def test_triangle_inequality(p, q, r):
    assert bck_distance(p, r) <= bck_distance(p, q) + bck_distance(q, r) + 1e-12


@given(st.floats(0.0, 2.0 * math.pi))
def test_density_grows_along_rays(a):
    r = np.linspace(0.0, 0.999999, 200)
    d = hyp_density_xy(r * math.cos(a), r * math.sin(a))
    assert np.all(np.diff(d) >= 0.0)
    assert d[-1] > 1e8
