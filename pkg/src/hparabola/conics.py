"""Symmetric-form conic algebra: duals, pencils, degenerate splitting, pole/polar.

A :class:`ConicForm` keeps the representative matrix it was built from, so
pencil coefficients are reported relative to that representative.  Equality
up to a nonzero scalar is tested after :func:`~hparabola.models.canonical_scale`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .models import BckPoint, DomainError, HomogeneousPoint, canonical_scale

RANK_TOL = 1e-9
ROOT_MERGE_TOL = 1e-9


class SingularConicError(ValueError):
    pass


class RankError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ConicForm:
    m: np.ndarray
    dual: bool = False

    def __post_init__(self):
        m = np.array(self.m, dtype=float)
        if m.shape != (3, 3):
            raise ValueError(f"conic matrix must be 3x3, got {m.shape}")
        if not np.allclose(m, m.T, rtol=0.0, atol=1e-12 * max(1.0, np.max(np.abs(m)))):
            raise ValueError("conic matrix must be symmetric")
        m = 0.5 * (m + m.T)
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    def __call__(self, v) -> float:
        v = np.asarray(v, dtype=float)
        return float(v @ self.m @ v)

    def canonical(self) -> np.ndarray:
        return canonical_scale(self.m)

    def equivalent(self, other: "ConicForm", tol: float = 1e-10) -> bool:
        return self.dual == other.dual and bool(
            np.max(np.abs(self.canonical() - other.canonical())) <= tol
        )

    def rank(self, tol: float = RANK_TOL) -> int:
        return matrix_rank(self.m, tol)

    def scaled(self, k: float) -> "ConicForm":
        return ConicForm(k * self.m, self.dual)


def matrix_rank(m: np.ndarray, tol: float = RANK_TOL) -> int:
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol * sv[0]))


# named forms -------------------------------------------------------------

def absolute() -> ConicForm:
    return ConicForm(np.diag([1.0, 1.0, -1.0]))


def dual_absolute() -> ConicForm:
    return ConicForm(np.diag([1.0, 1.0, -1.0]), dual=True)


def h_elliptic_parabola(C: float) -> ConicForm:
    """``x^2/C^2 + 2y^2 - 2y = 0`` in homogeneous form."""
    return ConicForm([[1.0 / (C * C), 0, 0], [0, 2.0, -1.0], [0, -1.0, 0]])


def supporting_horocycle() -> ConicForm:
    """``x^2 + 2y^2 - 2y = 0``."""
    return h_elliptic_parabola(1.0)


def directrix_horocycle(C: float) -> ConicForm:
    """``x^2 + (y - 1)((2 - C^2) y + C^2) = 0``."""
    c2 = C * C
    return ConicForm([[1.0, 0, 0], [0, 2.0 - c2, (c2 - (2.0 - c2)) / 2.0], [0, (c2 - (2.0 - c2)) / 2.0, -c2]])


def hypercycle(C: float) -> ConicForm:
    """Boundary of the supporting distance band, ``x^2/C^2 + y^2 - 1 = 0``."""
    return ConicForm(np.diag([1.0 / (C * C), 1.0, -1.0]))


def euclidean_parabola(p: float) -> ConicForm:
    """``x^2 - 2py = 0``."""
    return ConicForm([[1.0, 0, 0], [0, 0, -p], [0, -p, 0]])


def dual_euclidean_absolute() -> ConicForm:
    return ConicForm(np.diag([1.0, 1.0, 0.0]), dual=True)


def directrix_line(C: float) -> np.ndarray:
    """Polar of the proper focus w.r.t. the parabola: ``(3C^2 - 2) y = C^2``.

    Exposed as a formula only; the line need not meet the disk.
    """
    c2 = C * C
    return np.array([0.0, 3.0 * c2 - 2.0, -c2])


# operations --------------------------------------------------------------

def dual_conic(c: ConicForm) -> ConicForm:
    """Inverse matrix as the dual form.  The representative is the exact inverse."""
    if c.rank() < 3:
        raise SingularConicError("conic is degenerate; it has no dual conic")
    return ConicForm(np.linalg.inv(c.m), dual=not c.dual)


def adjugate(m: np.ndarray) -> np.ndarray:
    r0, r1, r2 = m
    return np.array([np.cross(r1, r2), np.cross(r2, r0), np.cross(r0, r1)]).T


def pencil_polynomial(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficients ``[c3, c2, c1, c0]`` of ``det(lam*a - b)``."""
    return np.array([
        np.linalg.det(a),
        -np.trace(adjugate(a) @ b),
        np.trace(a @ adjugate(b)),
        -np.linalg.det(b),
    ])


@dataclass(frozen=True)
class PencilMember:
    lam: float
    mu: float
    rank: int
    form: ConicForm = field(repr=False)

    @property
    def degenerate(self) -> bool:
        return self.rank < 3


def _polish(coeffs, r, steps=3):
    dp = np.polyder(coeffs)
    for _ in range(steps):
        d = np.polyval(dp, r)
        if d == 0.0:
            break
        step = np.polyval(coeffs, r) / d
        r -= step
        if abs(step) <= 4e-16 * max(1.0, abs(r)):
            break
    return float(r)


def _quadratic_roots(a, b, c):
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if disc > -1e-14 * b * b:
            return [-b / (2.0 * a)]
        return []
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return [0.0]
    return sorted([q / a, c / q])


def _cubic_real_root(c3, c2, c1, c0):
    """One real root of a cubic by the trigonometric/Cardano formulas."""
    a, b, c = c2 / c3, c1 / c3, c0 / c3
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc > 0.0:
        sq = math.sqrt(disc)
        t = math.copysign(abs(-q / 2.0 + sq) ** (1 / 3), -q / 2.0 + sq) + math.copysign(
            abs(-q / 2.0 - sq) ** (1 / 3), -q / 2.0 - sq
        )
    elif p == 0.0:
        t = 0.0
    else:
        r = math.sqrt(-p / 3.0)
        arg = max(-1.0, min(1.0, (3.0 * q) / (2.0 * p) * math.sqrt(-3.0 / p)))
        t = 2.0 * r * math.cos(math.acos(arg) / 3.0)
    return t - a / 3.0


def real_polynomial_roots(coeffs, merge_tol: float = ROOT_MERGE_TOL) -> list[float]:
    """Real roots of a polynomial of degree <= 3 (highest coefficient first).

    A double root of the cubic is located as a simple root of the derivative,
    which keeps it at full precision; otherwise one closed-form root is
    polished and deflated to a quadratic.
    """
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    if coeffs.size <= 1:
        return []
    if coeffs.size == 2:
        return [-coeffs[1] / coeffs[0]]
    if coeffs.size == 3:
        roots = [_polish(coeffs, r) for r in _quadratic_roots(*coeffs)]
    else:
        scale = np.sum(np.abs(coeffs))
        roots = None
        for r in _quadratic_roots(*np.polyder(coeffs)):
            r = _polish(np.polyder(coeffs), r)
            mag = np.sum(np.abs(coeffs) * np.abs(r) ** np.arange(3, -1, -1))
            if abs(np.polyval(coeffs, r)) <= 1e-13 * max(mag, scale * 1e-300):
                # (lam - r)^2 divides the cubic; the third root follows from the trace
                third = -coeffs[1] / coeffs[0] - 2.0 * r
                roots = [r, _polish(coeffs, third)]
                break
        if roots is None:
            r1 = _polish(coeffs, _cubic_real_root(*coeffs))
            quad, _ = np.polydiv(coeffs, np.array([1.0, -r1]))
            roots = [r1] + [_polish(coeffs, r) for r in _quadratic_roots(*quad)]
    roots.sort()
    merged: list[float] = []
    for r in roots:
        if merged and abs(r - merged[-1]) <= merge_tol * max(1.0, abs(r)):
            continue
        merged.append(r)
    return merged


def pencil_singular_members(a: ConicForm, b: ConicForm) -> list[PencilMember]:
    """Singular members ``lam*a - mu*b`` of the pencil spanned by two forms.

    Roots are reported with ``mu = 1``; when ``a`` itself is singular the
    member ``(lam, mu) = (1, 0)`` is included as well.
    """
    if matrix_rank(np.stack([a.m.ravel(), b.m.ravel()]), 1e-12) < 2:
        raise ValueError("pencil generators are proportional")
    coeffs = pencil_polynomial(a.m, b.m)
    big = np.max(np.abs(coeffs))
    coeffs = np.where(np.abs(coeffs) <= 1e-12 * big, 0.0, coeffs)
    members = []
    for lam in real_polynomial_roots(coeffs):
        form = ConicForm(lam * a.m - b.m, dual=a.dual)
        members.append(PencilMember(lam, 1.0, form.rank(), form))
    if coeffs[0] == 0.0:
        members.append(PencilMember(1.0, 0.0, a.rank(), a))
    return members


@dataclass(frozen=True)
class SplitResult:
    points: tuple[HomogeneousPoint, HomogeneousPoint] | None

    @property
    def imaginary(self) -> bool:
        return self.points is None


def split_degenerate_dual(c: ConicForm) -> SplitResult:
    """Factor a rank-2 form into two real linear factors, if it has them.

    With nonzero eigenvalues ``k1 > 0 > k2`` and eigenvectors ``e1, e2`` the
    factors are ``sqrt(k1) e1 +- sqrt(-k2) e2``.  For a dual form each factor
    is the pencil of lines through a point, so the points are returned.
    """
    if c.rank() != 2:
        raise RankError(f"expected a rank-2 form, got rank {c.rank()}")
    w, v = np.linalg.eigh(c.m)
    order = np.argsort(np.abs(w))
    k_a, k_b = w[order[1]], w[order[2]]
    e_a, e_b = v[:, order[1]], v[:, order[2]]
    if k_a * k_b > 0:
        return SplitResult(None)
    if k_a < 0:
        k_a, k_b, e_a, e_b = k_b, k_a, e_b, e_a
    u = math.sqrt(k_a) * e_a + math.sqrt(-k_b) * e_b
    w_ = math.sqrt(k_a) * e_a - math.sqrt(-k_b) * e_b
    return SplitResult((HomogeneousPoint(tuple(u)), HomogeneousPoint(tuple(w_))))


def polar_line(pt: HomogeneousPoint | np.ndarray, c: ConicForm) -> np.ndarray:
    if c.rank() < 3:
        raise SingularConicError("polarity needs a nondegenerate conic")
    v = pt.array if isinstance(pt, HomogeneousPoint) else np.asarray(pt, dtype=float)
    return canonical_scale(c.m @ v)


def pole(line, c: ConicForm) -> HomogeneousPoint:
    if c.rank() < 3:
        raise SingularConicError("polarity needs a nondegenerate conic")
    return HomogeneousPoint(tuple(np.linalg.solve(c.m, np.asarray(line, dtype=float))))


# focus extraction ----------------------------------------------------------

@dataclass(frozen=True)
class FocusExtraction:
    asymptotic: HomogeneousPoint
    proper: BckPoint
    members: tuple[PencilMember, ...]


def _absolute_value(pt: HomogeneousPoint) -> float:
    x1, x2, x3 = pt.coords
    return x1 * x1 + x2 * x2 - x3 * x3


def foci_of_h_elliptic_parabola(C: float) -> FocusExtraction:
    """Foci of ``x^2/C^2 + 2y^2 - 2y = 0`` from the pencil (dual absolute, dual conic)."""
    if not 0.0 < C < 1.0:
        raise DomainError(f"C must lie in (0, 1), got {C}")
    dual = dual_conic(h_elliptic_parabola(C))
    members = pencil_singular_members(dual_absolute(), dual)
    for member in members:
        if member.rank != 2:
            continue
        split = split_degenerate_dual(member.form)
        if split.imaginary:
            continue
        pts = sorted(split.points, key=lambda p: abs(_absolute_value(p)))
        asymptotic, proper = pts
        if abs(_absolute_value(asymptotic)) > 1e-9 or _absolute_value(proper) >= 0:
            continue
        x, y = proper.to_affine()
        expected = C * C / (2.0 - C * C)
        if abs(x) > 1e-8 or abs(y - expected) > 1e-8:
            raise RuntimeError(f"pencil focus ({x}, {y}) disagrees with (0, {expected})")
        return FocusExtraction(asymptotic, BckPoint(x, y), tuple(members))
    raise RuntimeError("no real split member found in the focal pencil")


def euclidean_parabola_foci(p: float) -> tuple[HomogeneousPoint, tuple[float, float]]:
    """Ideal and proper focus of ``x^2 = 2py`` from the pencil with the Euclidean dual absolute."""
    if not p > 0.0:
        raise DomainError(f"parabola parameter must be positive, got {p}")
    members = pencil_singular_members(dual_euclidean_absolute(), dual_conic(euclidean_parabola(p)))
    for member in members:
        if member.rank != 2:
            continue
        split = split_degenerate_dual(member.form)
        if split.imaginary:
            continue
        ideal = [q for q in split.points if q.is_ideal]
        proper = [q for q in split.points if not q.is_ideal]
        if len(ideal) == 1 and len(proper) == 1:
            return ideal[0], proper[0].to_affine()
    raise RuntimeError("no real split member found in the Euclidean focal pencil")
