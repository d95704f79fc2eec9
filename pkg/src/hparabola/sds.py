"""Study-de Sitter areas of co-polar regions and the polar route to the circumference difference.

The co-polar set of a convex body collects the poles (w.r.t. the unit
circle) of all lines meeting it.  Its SdS area equals the hyperbolic length
of the body's boundary, which gives a second derivation of the boundary
length difference between the half distance band and the parabolic disk.

The pieces used here live in the affine chart away from the ideal line:

* ``W``: ``C^2 x^2 + y^2 >= 1``, ``0 <= y <= eta``, ``x <= 0``
* ``E``: ``C^2 x^2 + 2y - 2 >= 0``, ``y <= eta``, ``x <= 0``
* ``Z``: ``x <= -1/C``, ``y <= 0``

together with their mirror images (``side=+1``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import conics
from .models import DomainError

_J = np.diag([1.0, 1.0, -1.0])


class SdsTag(str, Enum):
    W = "W"
    E = "E"
    Z = "Z"
    DISK = "disk"
    BAND_MINUS_PARABOLA = "band_minus_parabola"


@dataclass(frozen=True)
class SdsRegion:
    """A co-polar region.  ``eta`` is the lineal cutoff; ``C`` is the disk's Euclidean radius for ``DISK``."""

    tag: SdsTag
    C: float
    eta: float | None = None
    side: int = -1

    def __post_init__(self):
        tag = SdsTag(self.tag)
        object.__setattr__(self, "tag", tag)
        if not 0.0 < self.C < 1.0:
            raise DomainError(f"C must lie in (0, 1), got {self.C}")
        if self.side not in (-1, 1):
            raise DomainError("side must be -1 (x <= 0) or +1 (mirror image)")
        if tag in (SdsTag.W, SdsTag.BAND_MINUS_PARABOLA):
            if self.eta is None or not 0.0 < self.eta < 1.0:
                raise DomainError(f"{tag.value} needs eta in (0, 1), got {self.eta}")
        if tag is SdsTag.E and (self.eta is None or not self.eta < 1.0 or not math.isfinite(self.eta)):
            raise DomainError(f"E needs a finite eta below 1, got {self.eta}")


def sds_area_density(x: float, y: float) -> float:
    g = x * x + y * y - 1.0
    if not g > 0.0:
        raise DomainError(f"({x}, {y}) is not outside the absolute")
    return g ** -1.5


def arcoth(x: float) -> float:
    if not abs(x) > 1.0:
        raise DomainError(f"arcoth needs |x| > 1, got {x}")
    return math.atanh(1.0 / x)


# co-polar boundaries ----------------------------------------------------------

def copolar_conic(primal: conics.ConicForm) -> conics.ConicForm:
    """``J M^-1 J``: the curve of poles of the tangent lines of a nondegenerate conic."""
    return conics.ConicForm(_J @ np.linalg.inv(primal.m) @ _J)


def copolar_boundary_of_E(C: float) -> conics.ConicForm:
    """``C^2 x^2 + 2y - 2 = 0``."""
    return copolar_conic(conics.h_elliptic_parabola(C))


@dataclass(frozen=True)
class BandCopolarBoundary:
    """Boundary of the band's co-polar: the hypercycle's dual conic for ``y >= 0``
    joined with the polars of the two base vertices for ``y <= 0``."""

    hypercycle_dual: conics.ConicForm
    vertex_polars: tuple[np.ndarray, np.ndarray]


def copolar_boundary_of_B(C: float) -> BandCopolarBoundary:
    absolute = conics.absolute()
    polars = tuple(conics.polar_line(np.array([sgn * C, 0.0, 1.0]), absolute) for sgn in (-1.0, 1.0))
    return BandCopolarBoundary(copolar_conic(conics.hypercycle(C)), polars)


# closed forms -------------------------------------------------------------------

def _cof(C):
    return math.sqrt((1.0 - C) * (1.0 + C))


def _ratio_artanh(num: float, den: float, gap: float) -> float:
    """``artanh(num/den)`` with ``gap = den - num > 0`` supplied exactly."""
    z = num / den
    if z <= 1.0 - 1e-6:
        return math.atanh(z)
    return 0.5 * math.log((den + num) / gap)


def _q(C: float, eta: float) -> float:
    q2 = 1.0 - C * C * (1.0 + eta) / 2.0
    if q2 <= 0.0:
        raise DomainError(f"1 - C^2 (1 + eta)/2 must be positive, got {q2}")
    return math.sqrt(q2)


def _check(C, eta=None, lo=0.0):
    if not 0.0 < C < 1.0:
        raise DomainError(f"C must lie in (0, 1), got {C}")
    if eta is not None and not (lo < eta < 1.0):
        raise DomainError(f"eta must lie in ({lo}, 1), got {eta}")


def sds_area_W(C: float, eta: float) -> float:
    _check(C, eta)
    s = _cof(C)
    return (1.0 - s) / s * math.atanh(eta)


def sds_area_E_tilde(C: float, eta: float) -> float:
    """Valid for every ``eta < 1``."""
    _check(C, eta, lo=-math.inf)
    s = _cof(C)
    q = _q(C, eta)
    c2 = C * C
    first = _ratio_artanh(s, q, (c2 * (1.0 - eta) / 2.0) / (q + s))
    num = 2.0 - c2 + 2.0 * q
    den = 2.0 - c2 * eta + 2.0 * q
    return first / s - _ratio_artanh(num, den, c2 * (1.0 - eta))


def remo_lhs(C: float, eta: float) -> float:
    """Second term of the co-polar parabola area, as one artanh."""
    _check(C, eta, lo=-math.inf)
    q = _q(C, eta)
    c2 = C * C
    return _ratio_artanh(2.0 - c2 + 2.0 * q, 2.0 - c2 * eta + 2.0 * q, c2 * (1.0 - eta))


def remo_rhs(C: float, eta: float) -> float:
    """The same term split by the artanh addition formula; needs ``-1 < eta < 1``."""
    _check(C, eta, lo=-1.0)
    return math.atanh(_q(C, eta)) + math.atanh(eta)


def sds_area_Z(C: float) -> float:
    _check(C)
    return math.atanh(C)


def sds_area_Z_arcoth(C: float) -> float:
    """``[-arcoth x]`` evaluated between ``-inf`` and ``-1/C``."""
    _check(C)
    return -arcoth(-1.0 / C)


def copolar_band_minus_parabola(C: float, eta: float) -> float:
    """``2 (W + Z - E)``: the cut co-polar area between band and parabola, from the three pieces."""
    return 2.0 * (sds_area_W(C, eta) + sds_area_Z(C) - sds_area_E_tilde(C, eta))


def copolar_band_minus_parabola_ln(C: float, eta: float) -> float:
    """The same area after recombination into one logarithm; continuous up to ``eta = 1``."""
    _check(C)
    if not 0.0 < eta <= 1.0:
        raise DomainError(f"eta must lie in (0, 1], got {eta}")
    s = _cof(C)
    q = _q(C, eta)
    one_minus_q2 = C * C * (1.0 + eta) / 2.0
    artanh_q = math.log((1.0 + q) / math.sqrt(one_minus_q2))
    lead = math.log(C * math.sqrt((1.0 + eta) / 2.0) / (q + s))
    return 2.0 * (lead / s + artanh_q + math.atanh(C))


def circumference_diff_via_polar(C: float) -> float:
    """The band-minus-parabola boundary length difference as the uncut co-polar area."""
    return copolar_band_minus_parabola_ln(C, 1.0)


# disk example -------------------------------------------------------------------

@dataclass(frozen=True)
class DiskDualityReport:
    C: float
    R: float
    area_hyp: float
    len_sds_boundary: float
    len_hyp_boundary: float
    area_sds_copolar: float
    pc1_closed_residual: float
    pc2_closed_residual: float
    quad_area_hyp: float
    quad_len_sds_boundary: float
    quad_len_hyp_boundary: float
    quad_area_sds_copolar: float
    pc1_quad_residual: float
    pc2_quad_residual: float

    def passed(self, closed_tol: float = 1e-13, quad_rel: float = 1e-8) -> bool:
        return (
            abs(self.pc1_closed_residual) <= closed_tol * max(1.0, abs(self.area_hyp))
            and abs(self.pc2_closed_residual) <= closed_tol * max(1.0, abs(self.len_hyp_boundary))
            and abs(self.pc1_quad_residual) <= quad_rel * max(1.0, abs(self.area_hyp))
            and abs(self.pc2_quad_residual) <= quad_rel * max(1.0, abs(self.len_hyp_boundary))
        )


def verify_duality_disk(C: float, cfg=None) -> DiskDualityReport:
    """Check area/length duality for the disk of radius ``artanh C`` both in closed form and by quadrature."""
    from . import quadrature as quad

    _check(C)
    cfg = cfg or quad.QuadratureConfig()
    R = math.atanh(C)
    s = _cof(C)
    cosh_r, sinh_r = 1.0 / s, C / s
    area_hyp = 2.0 * math.pi * (cosh_r - 1.0)
    len_sds = 2.0 * math.pi * cosh_r
    len_hyp = 2.0 * math.pi * sinh_r
    area_sds = 2.0 * math.pi * C / s
    q_area = quad.quad_disk_area(R, cfg).value
    q_len_sds = quad.quad_sds_circle_length(1.0 / C, cfg).value
    q_len_hyp = quad.quad_disk_circumference(R, cfg).value
    q_area_sds = quad.quad_area_sds(SdsRegion(SdsTag.DISK, C), cfg).value
    return DiskDualityReport(
        C, R, area_hyp, len_sds, len_hyp, area_sds,
        area_hyp - (-2.0 * math.pi + len_sds), len_hyp - area_sds,
        q_area, q_len_sds, q_len_hyp, q_area_sds,
        q_area - (-2.0 * math.pi + q_len_sds), q_len_hyp - q_area_sds,
    )
