import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from hypothesis.extra.numpy import arrays

from hparabola import conics
from hparabola.models import DomainError, HomogeneousPoint

GRID = [k / 10 for k in range(1, 10)]

symmetric = arrays(np.float64, (3, 3), elements=st.floats(-5.0, 5.0)).map(lambda a: a + a.T)


def test_named_forms():
    assert np.allclose(conics.absolute().m, np.diag([1.0, 1.0, -1.0]))
    assert np.allclose(conics.h_elliptic_parabola(0.5).m, [[4.0, 0, 0], [0, 2.0, -1.0], [0, -1.0, 0]])
    assert conics.h_elliptic_parabola(0.5).rank() == 3


@pytest.mark.parametrize("C", GRID)
def test_pencil_has_two_singular_members(C):
    members = conics.pencil_singular_members(conics.dual_absolute(), conics.dual_conic(conics.h_elliptic_parabola(C)))
    lams = sorted(m.lam / m.mu for m in members if m.degenerate)
    assert len(lams) == 2
    assert lams == pytest.approx([C * C, 1.0], abs=1e-12)


@pytest.mark.parametrize("C", GRID)
def test_focus_pipeline(C):
    fx = conics.foci_of_h_elliptic_parabola(C)
    assert fx.asymptotic.to_affine() == pytest.approx((0.0, 1.0), abs=1e-10)
    assert (fx.proper.x, fx.proper.y) == pytest.approx((0.0, C * C / (2 - C * C)), abs=1e-10)


def test_focus_examples():
    fx = conics.foci_of_h_elliptic_parabola(0.6)
    assert fx.proper.y == pytest.approx(0.2195122, abs=5e-8)
    assert conics.foci_of_h_elliptic_parabola(1e-3).proper.y == pytest.approx(0.0, abs=1e-6)
    # at the matching-shift root the focus sits at about 0.474037
    assert conics.foci_of_h_elliptic_parabola(0.801986).proper.y == pytest.approx(0.474037, abs=1e-6)


def test_euclidean_parabola_foci():
    ideal, proper = conics.euclidean_parabola_foci(1.0)
    assert ideal.is_ideal
    assert ideal.coords == pytest.approx((0.0, 1.0, 0.0), abs=1e-12)
    assert proper == pytest.approx((0.0, 0.5), abs=1e-12)
    with pytest.raises(DomainError):
        conics.euclidean_parabola_foci(0.0)


def test_polynomial_roots():
    # (x - 1)^2 (x - 3)
    assert conics.real_polynomial_roots([1.0, -5.0, 7.0, -3.0]) == pytest.approx([1.0, 3.0], abs=1e-12)
    assert conics.real_polynomial_roots([1.0, -6.0, 11.0, -6.0]) == pytest.approx([1.0, 2.0, 3.0], abs=1e-12)
    assert conics.real_polynomial_roots([1.0, 0.0, 1.0, 0.0]) == pytest.approx([0.0], abs=1e-12)


def test_proportional_forms_rejected():
    a = conics.absolute()
    with pytest.raises(ValueError):
        conics.pencil_singular_members(a, a.scaled(2.0))


def test_imaginary_split():
    # x^2 + y^2: two conjugate imaginary lines
    assert conics.split_degenerate_dual(conics.ConicForm(np.diag([1.0, 1.0, 0.0]))).imaginary


def test_split_needs_rank_two():
    with pytest.raises(conics.RankError):
        conics.split_degenerate_dual(conics.absolute())


def test_polarity_needs_nondegenerate_form():
    with pytest.raises(conics.SingularConicError):
        conics.polar_line(np.array([0.0, 0.0, 1.0]), conics.ConicForm(np.diag([1.0, 1.0, 0.0])))


def test_vertex_polars_are_vertical_lines():
    for sgn in (-1.0, 1.0):
        line = conics.polar_line(np.array([sgn * 0.6, 0.0, 1.0]), conics.absolute())
        # sgn*0.6 x - 1 = 0, i.e. x = sgn/0.6
        assert line[1] == 0.0
        assert -line[2] / line[0] == pytest.approx(sgn / 0.6, rel=1e-14)


def test_polar_of_center_point_example():
    # the polar of (0, -1) w.r.t. the absolute is the tangent y = -1
    line = conics.polar_line(np.array([0.0, -1.0, 1.0]), conics.absolute())
    assert np.allclose(line / line[1], [0.0, 1.0, 1.0])


@given(symmetric)
def test_duality_is_an_involution(m):
    assume(np.linalg.cond(m) <= 1e6)
    c = conics.ConicForm(m)
    twice = conics.dual_conic(conics.dual_conic(c))
    assert twice.equivalent(c, 1e-10)


@given(arrays(np.float64, 3, elements=st.floats(-3.0, 3.0)), st.sampled_from([0.2, 0.6, 0.9]))
def test_pole_polar_involution(v, C):
    assume(np.max(np.abs(v)) > 1e-3)
    pt = HomogeneousPoint(tuple(v))
    for c in (conics.absolute(), conics.h_elliptic_parabola(C), conics.hypercycle(C)):
        back = conics.pole(conics.polar_line(pt, c), c)
        assert back.close_to(pt, 1e-12)


@given(st.floats(0.05, 0.95))
def test_split_reconstructs_member(C):
    for m in conics.foci_of_h_elliptic_parabola(C).members:
        if m.rank != 2:
            continue
        split = conics.split_degenerate_dual(m.form)
        if split.imaginary:
            continue
        u, v = (p.array for p in split.points)
        rebuilt = conics.ConicForm(0.5 * (np.outer(u, v) + np.outer(v, u)), dual=True)
        assert rebuilt.equivalent(m.form, 1e-10)
