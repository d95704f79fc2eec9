"""Coordinate charts of the hyperbolic plane and pointwise metric evaluators.

Two charts are used throughout: the projective (Beltrami-Cayley-Klein) unit
disk, where lines are chords, and the conformal upper half-plane.  The
scaling constant of the metric is fixed to 1.

Scalar functions validate their input and raise :class:`DomainError`; the
``*_xy`` variants are vectorized numpy kernels without validation, meant for
quadrature inner loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# points with x^2 + y^2 above 1 - INTERIOR_MARGIN count as "on the absolute"
INTERIOR_MARGIN = 1e-14


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


@dataclass(frozen=True)
class BckPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite coordinates {self.x!r}, {self.y!r}")
        if self.x * self.x + self.y * self.y > 1.0 - INTERIOR_MARGIN:
            raise DomainError(f"({self.x}, {self.y}) is not inside the unit disk")

    def gap(self) -> float:
        """``1 - x^2 - y^2``, evaluated as ``(1-r)(1+r)`` with ``r = hypot(x, y)``."""
        r = math.hypot(self.x, self.y)
        return (1.0 - r) * (1.0 + r)


@dataclass(frozen=True)
class BphPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite coordinates {self.x!r}, {self.y!r}")
        if self.y <= 0.0:
            raise DomainError(f"half-plane point needs y > 0, got {self.y}")


@dataclass(frozen=True)
class HomogeneousPoint:
    """Projective point ``[x1, x2, x3]``, stored in canonical scale.

    The largest-magnitude component is scaled to +-1 and the first
    component that is not negligible is made positive, so two
    representatives of the same point compare equal entrywise.
    """

    coords: tuple[float, float, float]

    def __post_init__(self):
        v = np.asarray(self.coords, dtype=float).reshape(3)
        object.__setattr__(self, "coords", tuple(float(c) for c in canonical_scale(v)))

    @classmethod
    def affine(cls, x: float, y: float) -> "HomogeneousPoint":
        return cls((x, y, 1.0))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords)

    @property
    def is_ideal(self) -> bool:
        return abs(self.coords[2]) <= 1e-12

    def to_affine(self) -> tuple[float, float]:
        if self.is_ideal:
            raise DomainError(f"{self.coords} is a point at infinity")
        x1, x2, x3 = self.coords
        return x1 / x3, x2 / x3

    def close_to(self, other: "HomogeneousPoint", tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.array - other.array)) <= tol)


def canonical_scale(v: np.ndarray, rel_zero: float = 1e-12) -> np.ndarray:
    """Rescale an array so its largest |entry| is 1 and its first significant entry is positive."""
    v = np.asarray(v, dtype=float)
    flat = v.ravel()
    big = np.max(np.abs(flat))
    if big == 0.0 or not math.isfinite(big):
        raise DomainError("cannot normalize a zero or non-finite array")
    out = v / big
    for c in out.ravel():
        if abs(c) > rel_zero:
            if c < 0:
                out = -out
            break
    return out + 0.0  # drop negative zeros


def arcosh1p(u: float) -> float:
    """``arcosh(1 + u)`` without cancellation for small ``u >= 0``."""
    if u < 0.0:
        if u > -1e-15:
            return 0.0
        raise DomainError(f"arcosh(1 + u) needs u >= 0, got {u}")
    return math.log1p(u + math.sqrt(u * (2.0 + u)))


def bck_distance(p: BckPoint, q: BckPoint) -> float:
    """Hyperbolic distance in the projective disk.

    The cross-ratio argument ``z = (1 - p.q) / sqrt(gap_p gap_q)`` is handled
    as ``1 + u`` with ``u`` built from ``|p-q|^2 - (p x q)^2`` so nearby points
    do not lose digits.
    """
    gp, gq = p.gap(), q.gap()
    dx, dy = p.x - q.x, p.y - q.y
    cross = p.x * q.y - p.y * q.x
    num = dx * dx + dy * dy - cross * cross
    root = math.sqrt(gp * gq)
    inner = 1.0 - p.x * q.x - p.y * q.y
    return arcosh1p(num / (root * (inner + root)))


def bck_to_bph(p: BckPoint) -> BphPoint:
    omy = 1.0 - p.y
    return BphPoint(p.x / omy, math.sqrt(p.gap()) / omy)


def bph_to_bck(p: BphPoint) -> BckPoint:
    r2 = p.x * p.x + p.y * p.y
    return BckPoint(2.0 * p.x / (r2 + 1.0), (r2 - 1.0) / (r2 + 1.0))


def bph_distance(p: BphPoint, q: BphPoint) -> float:
    dx, dy = p.x - q.x, p.y - q.y
    return arcosh1p((dx * dx + dy * dy) / (2.0 * p.y * q.y))


def hyp_area_density(p: BckPoint) -> float:
    return p.gap() ** -1.5


def hyp_arclength_integrand(pos: BckPoint, vel: tuple[float, float]) -> float:
    g = pos.gap()
    vx, vy = vel
    dot = pos.x * vx + pos.y * vy
    return math.sqrt(g * (vx * vx + vy * vy) + dot * dot) / g


def bph_area_density(p: BphPoint) -> float:
    return 1.0 / (p.y * p.y)


def bph_arclength_integrand(pos: BphPoint, vel: tuple[float, float]) -> float:
    return math.hypot(*vel) / pos.y


# vectorized kernels -------------------------------------------------------

def hyp_density_xy(x, y, one_minus_y=None):
    """Area density of the disk model; pass ``one_minus_y`` when ``y`` is close to 1."""
    omy = 1.0 - y if one_minus_y is None else one_minus_y
    return (omy * (2.0 - omy) - x * x) ** -1.5


def hyp_speed_xy(x, y, vx, vy):
    g = (1.0 - y) * (1.0 + y) - x * x
    dot = x * vx + y * vy
    return np.sqrt(g * (vx * vx + vy * vy) + dot * dot) / g


def sds_density_xy(x, y):
    """Area density of the exterior (Study-de Sitter) region, ``(x^2+y^2-1)^(-3/2)``."""
    return (x * x + y * y - 1.0) ** -1.5


def sds_speed_xy(x, y, vx, vy):
    """Length integrand for spacelike curves outside the absolute (sign-flipped metric)."""
    g = x * x + y * y - 1.0
    dot = x * vx + y * vy
    q = g * (vx * vx + vy * vy) - dot * dot
    return np.sqrt(q) / g
