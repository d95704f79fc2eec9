"""Closed-form areas, boundary lengths, matching translations and limit constants.

Every function validates its parameters and raises :class:`DomainError`
outside the open validity domain.  Expressions of the form
``artanh sqrt(a/A)`` are switched to ``ln((sqrt A + sqrt a) / sqrt(A - a))``
when the argument exceeds ``1 - 1e-6``; ``A - a`` is always supplied in a
cancellation-free closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .models import DomainError

LN2 = math.log(2.0)
LN_SWITCH = 1.0 - 1e-6
ARTANH_MARGIN = 1e-14


def _open_unit(name: str, v: float) -> float:
    if not (0.0 < v < 1.0) or not math.isfinite(v):
        raise DomainError(f"{name} must lie in (0, 1), got {v}")
    return float(v)


def _C(C):
    return _open_unit("C", C)


def _eta(eta):
    return _open_unit("eta", eta)


def cofactor(C: float) -> float:
    """``sqrt(1 - C^2)`` evaluated as ``sqrt((1 - C)(1 + C))``."""
    return math.sqrt((1.0 - C) * (1.0 + C))


def artanh(z: float) -> float:
    if not abs(z) < 1.0 - ARTANH_MARGIN:
        raise DomainError(f"artanh argument {z} is outside (-1, 1)")
    return math.atanh(z)


def artanh_sqrt_ratio(a: float, big_a: float, gap: float) -> float:
    """``artanh sqrt(a / A)`` for ``0 <= a < A``, given ``gap = A - a`` exactly."""
    if a < 0.0 or big_a <= 0.0 or gap <= 0.0:
        raise DomainError(f"artanh sqrt(a/A) needs 0 <= a < A, got a={a}, A={big_a}")
    z = math.sqrt(a / big_a)
    if z <= LN_SWITCH:
        return math.atanh(z)
    return math.log((math.sqrt(big_a) + math.sqrt(a)) / math.sqrt(gap))


def artanh_of_cofactor(C: float) -> float:
    """``artanh sqrt(1 - C^2) = ln((1 + sqrt(1 - C^2)) / C)``, exact for small C."""
    return math.log((1.0 + cofactor(C)) / C)


def focal_distance(C: float) -> float:
    """Vertex-to-focus distance, ``artanh(C^2/(2 - C^2)) = -ln sqrt(1 - C^2)``."""
    _C(C)
    return -0.5 * math.log1p(-C * C)


def focal_distance_artanh(C: float) -> float:
    _C(C)
    return artanh(C * C / (2.0 - C * C))


def band_coefficient(C: float) -> float:
    """Area per unit axial length of the two-sided distance band, ``2C / sqrt(1 - C^2)``."""
    return 2.0 * C / cofactor(C)


# areas ------------------------------------------------------------------------

def area_band_segment(C: float, eta: float) -> float:
    _C(C)
    _eta(eta)
    return band_coefficient(C) * math.atanh(eta)


def area_parabola_segment(C: float, eta: float) -> float:
    _C(C)
    _eta(eta)
    s = cofactor(C)
    big_a = 1.0 + eta - 2.0 * C * C * eta
    hyp = artanh_sqrt_ratio(2.0 * eta * s * s, big_a, 1.0 - eta)
    return band_coefficient(C) * hyp - 2.0 * math.atan(C * math.sqrt(2.0 * eta) / math.sqrt(big_a))


def area_horodisk_segment(eta: float) -> float:
    _eta(eta)
    w = math.sqrt(2.0 * eta / (1.0 - eta))
    return 2.0 * w - 2.0 * math.atan(w)


def area_asymptotic_triangle(C: float) -> float:
    _C(C)
    return 2.0 * math.asin(C)


def area_asymptotic_triangle_defect(C: float) -> float:
    """The same area as ``pi - 0 - 2 * angle`` with base angle ``arccos C``."""
    _C(C)
    return math.pi - 2.0 * math.acos(C)


def area_diff_B_minus_E(C: float) -> float:
    return band_coefficient(C) * (focal_distance(C) - LN2) + 2.0 * math.asin(C)


def area_diff_B_minus_E_segment(C: float, eta: float) -> float:
    """Area of ``B_eta`` minus ``E_eta`` in the ln form that stays accurate as eta -> 1."""
    _C(C)
    _eta(eta)
    s = cofactor(C)
    big_a = 1.0 + eta - 2.0 * C * C * eta
    inner = math.sqrt(big_a) + math.sqrt(2.0 * eta) * s
    return band_coefficient(C) * math.log(math.sqrt(1.0 + eta) / inner) + 2.0 * math.atan(
        C * math.sqrt(2.0 * eta) / math.sqrt(big_a)
    )


def area_diff_D_minus_E(C: float) -> float:
    _C(C)
    return band_coefficient(C) * (1.0 - LN2)


def area_diff_D_minus_E_recombined(C: float) -> float:
    """``Area(B\\E) - Area(B_f) + Area(E1_f)`` with ``f`` the focus height."""
    yf = C * C / (2.0 - C * C)
    return area_diff_B_minus_E(C) - area_band_segment(C, yf) + area_horodisk_segment(yf)


def translation_equiv_constant() -> float:
    """Translation distance that makes the shifted ``D`` match ``E`` in area."""
    return 1.0 - LN2


def translation_equiv_for(C: float) -> float:
    """The same distance recovered at a given C from the recombined area difference."""
    return area_diff_D_minus_E_recombined(C) / band_coefficient(C)


def equ1_residual(C: float) -> float:
    """``Area(B\\E) - [Area(B \\ B_up(focal)) - Area(B_{3/5}) + Area(A)]``.

    The bracket is the difference-level statement that ``E`` equals the band
    raised to the focus, plus the band segment at 3/5, minus the triangle.
    """
    yf = C * C / (2.0 - C * C)
    rhs = area_band_segment(C, yf) - area_band_segment(C, 0.6) + area_asymptotic_triangle(C)
    return area_diff_B_minus_E(C) - rhs


def focal_band_ratio(C: float) -> float:
    """``Area(B_up \\ E) / Area(E \\ B_up)`` for the band raised to the focus."""
    yf = C * C / (2.0 - C * C)
    inside = area_parabola_segment(C, yf)
    return 1.0 + (2.0 * math.asin(C) - band_coefficient(C) * LN2) / inside


def focal_band_ratio_limit_at_one() -> float:
    """``1 - ln 2 / ln(1 + sqrt 2)``: the ratio does not tend to 1."""
    return 1.0 - LN2 / math.log1p(math.sqrt(2.0))


# matching translation of the band ---------------------------------------------

def alpha(C: float) -> float:
    """Upward shift of ``B`` whose excess over ``E`` vanishes in area."""
    _C(C)
    return focal_distance(C) - LN2 + math.asin(C) * cofactor(C) / C


def alpha_deviation(C: float) -> float:
    """``alpha(C) - focal(C)``; decreasing from ``1 - ln 2`` to ``-ln 2``."""
    _C(C)
    return math.asin(C) * cofactor(C) / C - LN2


def alpha_artanh_reading(C: float) -> float:
    """``artanh(alpha(C))``: the literal reading of the displayed limit statements."""
    return artanh(alpha(C))


def alpha_limit_at_zero() -> float:
    return 1.0 - LN2


def alpha_deviation_limit_at_one() -> float:
    return -LN2


@dataclass(frozen=True)
class RootResult:
    root: float
    error_bound: float
    iterations: int
    bracket: tuple[float, float]


def bisect_decreasing(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10,
                      max_iter: int = 200) -> RootResult:
    """Bisection for a sign change of ``f`` on ``[lo, hi]``."""
    if not lo < hi:
        raise DomainError(f"bracket must satisfy lo < hi, got [{lo}, {hi}]")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return RootResult(lo, 0.0, 0, (lo, hi))
    if f_hi == 0.0:
        return RootResult(hi, 0.0, 0, (lo, hi))
    if (f_lo > 0) == (f_hi > 0):
        raise DomainError(f"no sign change on [{lo}, {hi}]: f = {f_lo}, {f_hi}")
    a, b, fa = lo, hi, f_lo
    it = 0
    while it < max_iter and 0.5 * (b - a) > tol:
        it += 1
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return RootResult(m, 0.0, it, (lo, hi))
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return RootResult(0.5 * (a + b), 0.5 * (b - a), it, (lo, hi))


def alpha_root(lo: float = 0.5, hi: float = 0.95, tol: float = 1e-10, max_iter: int = 200) -> RootResult:
    """The unique C where ``alpha(C)`` equals the focal distance."""
    return bisect_decreasing(alpha_deviation, lo, hi, tol, max_iter)


# boundary lengths ----------------------------------------------------------------

def len_band_segment_boundary(C: float, eta: float) -> float:
    _C(C)
    _eta(eta)
    return 2.0 * math.atanh(eta) / cofactor(C) + 2.0 * math.atanh(C)


def len_parabola_segment_boundary(C: float, eta: float) -> float:
    _C(C)
    _eta(eta)
    s = cofactor(C)
    c2 = C * C
    big_a = c2 + 2.0 * eta - 3.0 * c2 * eta
    first = artanh_sqrt_ratio(2.0 * eta * s * s, big_a, c2 * (1.0 - eta))
    second = artanh_sqrt_ratio(2.0 * eta * s ** 4, big_a, c2 * (1.0 + eta - 2.0 * c2 * eta))
    return 2.0 * (first / s - second)


def len_horocycle_segment(eta: float) -> float:
    _eta(eta)
    return 2.0 * math.sqrt(2.0 * eta / (1.0 - eta))


def horocycle_half_chord(eta: float) -> float:
    """Half the chord length ``r = artanh sqrt(2 eta / (1 + eta))`` of the cut horocycle."""
    _eta(eta)
    return artanh_sqrt_ratio(2.0 * eta, 1.0 + eta, 1.0 - eta)


def chord_arc_relation(r: float) -> float:
    """Horocyclic arc length over a chord of length ``2r``."""
    if not r > 0.0:
        raise DomainError(f"chord half-length must be positive, got {r}")
    return 2.0 * math.sinh(r)


def len_M(C: float, eta: float) -> float:
    """Length of the two horizontal cut pieces between the parabola and the band at height eta."""
    _C(C)
    if not 0.0 < eta <= 1.0:
        raise DomainError(f"eta must lie in (0, 1], got {eta}")
    r1, r2 = math.sqrt(1.0 + eta), math.sqrt(2.0 * eta)
    num = (1.0 - eta) / (r1 + r2) * C
    return 2.0 * math.atanh(num / (r1 - C * C * r2))


def len_diff_segment(C: float, eta: float) -> float:
    """Boundary length of ``B_eta`` minus that of ``E_eta`` (cut pieces excluded), ln form."""
    _C(C)
    _eta(eta)
    s = cofactor(C)
    c2 = C * C
    big_a = c2 + 2.0 * eta - 3.0 * c2 * eta
    lead = math.log(math.sqrt(c2 * (1.0 + eta)) / (math.sqrt(big_a) + s * math.sqrt(2.0 * eta)))
    second = artanh_sqrt_ratio(2.0 * eta * s ** 4, big_a, c2 * (1.0 + eta - 2.0 * c2 * eta))
    return 2.0 * lead / s + 2.0 * second + 2.0 * math.atanh(C)


# circumference differences and matching translations ------------------------

def G(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return 2.0 / s * math.log(C / (2.0 * s)) + 2.0 * artanh_of_cofactor(C) + 2.0 * math.atanh(C)


def Gprime(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return 2.0 * (math.log(C) - LN2) / s + 2.0 * artanh_of_cofactor(C) + 2.0 * C / s


def Ghat(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return 2.0 * (math.log(2.0 / C) / s - artanh_of_cofactor(C))


def beta(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return math.log(C / (2.0 * s)) + s * (artanh_of_cofactor(C) + math.atanh(C))


def beta_minus_focal(C: float) -> float:
    """``beta(C) - focal(C)`` without subtracting two large numbers."""
    _C(C)
    s = cofactor(C)
    return math.log(C) - LN2 + s * (artanh_of_cofactor(C) + math.atanh(C))


def beta_hat_D(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return math.log(C) - LN2 + s * artanh_of_cofactor(C) + C


def beta_hat_V(C: float) -> float:
    _C(C)
    s = cofactor(C)
    return math.log(2.0 / C) - s * artanh_of_cofactor(C)


def beta_minus_focal_limit_at_one() -> float:
    return -LN2


def beta_hat_D_limits() -> tuple[float, float]:
    return 0.0, 1.0 - LN2


def beta_hat_V_limits() -> tuple[float, float]:
    return 0.0, LN2


# disk -------------------------------------------------------------------------

def _radius(R):
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"radius must be positive and finite, got {R}")
    return R


def disk_area(R: float) -> float:
    _radius(R)
    return 4.0 * math.pi * math.sinh(0.5 * R) ** 2


def disk_circumference(R: float) -> float:
    _radius(R)
    return 2.0 * math.pi * math.sinh(R)


# half-plane computations ----------------------------------------------------------

def _theta(theta):
    if not (theta > 1.0 and math.isfinite(theta)):
        raise DomainError(f"horocyclic cutoff must exceed 1, got {theta}")
    return theta


def bph_area_D_cut(C: float, theta: float) -> float:
    _C(C)
    return band_coefficient(C) * math.log(_theta(theta))


def bph_area_E_cut(C: float, theta: float) -> float:
    _C(C)
    _theta(theta)
    w = math.sqrt((theta - 1.0) * (theta + 1.0)) / theta
    return band_coefficient(C) * (math.acosh(theta) - w)


def bph_area_diff_D_minus_E_cut(C: float, theta: float) -> float:
    _C(C)
    _theta(theta)
    w = math.sqrt((theta - 1.0) * (theta + 1.0)) / theta
    return band_coefficient(C) * (w - math.log1p(w))


def bph_area_diff_D_minus_V(C: float) -> float:
    _C(C)
    return band_coefficient(C)


def bph_area_diff_E_minus_V(C: float) -> float:
    _C(C)
    return band_coefficient(C) * LN2


def bph_len_diff_D_minus_E_cut(C: float, theta: float) -> float:
    _C(C)
    _theta(theta)
    s = cofactor(C)
    c2 = C * C
    t2m1 = (theta - 1.0) * (theta + 1.0)
    big_a = c2 + t2m1
    lead = C + math.log(C * theta / (math.sqrt(big_a) + math.sqrt(t2m1)))
    tail = artanh_sqrt_ratio(s * s * t2m1, big_a, c2 * theta * theta)
    return 2.0 * (lead / s + tail)


def bph_len_diff_D_minus_V(C: float) -> float:
    _C(C)
    return band_coefficient(C)


# registry --------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormValue:
    value: float
    formula_id: str
    parameters: tuple[tuple[str, float], ...]


PER_C: dict[str, Callable[[float], float]] = {
    "alpha": alpha,
    "alpha_deviation": alpha_deviation,
    "beta": beta,
    "beta_hat_D": beta_hat_D,
    "beta_hat_V": beta_hat_V,
    "G": G,
    "Gprime": Gprime,
    "Ghat": Ghat,
    "focal": focal_distance,
    "area_diff_B_minus_E": area_diff_B_minus_E,
    "area_diff_D_minus_E": area_diff_D_minus_E,
    "bph_area_diff_D_minus_V": bph_area_diff_D_minus_V,
    "bph_area_diff_E_minus_V": bph_area_diff_E_minus_V,
    "area_asymptotic_triangle": area_asymptotic_triangle,
    "focal_band_ratio": focal_band_ratio,
}

SCALARS: dict[str, Callable[[], float]] = {
    "alpha_root": lambda: alpha_root().root,
    "translation_equiv_constant": translation_equiv_constant,
}


def evaluate(formula_id: str, C: float | None = None) -> ClosedFormValue:
    if formula_id in PER_C:
        if C is None:
            raise DomainError(f"{formula_id} needs a C value")
        return ClosedFormValue(PER_C[formula_id](C), formula_id, (("C", C),))
    if formula_id in SCALARS:
        return ClosedFormValue(SCALARS[formula_id](), formula_id, ())
    raise KeyError(f"unknown quantity {formula_id!r}")
