"""The canonical h-elliptic parabola, its comparison regions and synthetic elements.

All regions live in the projective disk.  The parabolic disk is
``E: x^2/C^2 + 2y^2 - 2y <= 0``, the half distance band is
``B: x^2/C^2 + y^2 <= 1, y >= 0`` and ``D = B`` intersected with the
supporting horodisk ``E1``.  ``A`` is the asymptotic triangle with vertices
``(+-C, 0)`` and ``(0, 1)``; ``V`` is the inner approximation bounded by the
horocyclically translated hypercycle arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import conics
from .models import BckPoint, BphPoint, DomainError, HomogeneousPoint, bck_distance, bck_to_bph

C_GUARD = 1e-12
BOUNDARY_TOL = 1e-12


class Family(str, Enum):
    E = "E"
    B = "B"
    D = "D"
    V = "V"
    A = "A"
    E1 = "E1"
    BAND_SEGMENT = "BandSegment"


class CutoffKind(str, Enum):
    LINEAL = "lineal"  # y <= eta in the disk
    HOROCYCLIC = "horocyclic"  # y_check <= theta in the half-plane


@dataclass(frozen=True)
class Cutoff:
    kind: CutoffKind
    value: float

    def __post_init__(self):
        kind = CutoffKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is CutoffKind.LINEAL and not 0.0 < self.value < 1.0:
            raise DomainError(f"lineal cutoff needs eta in (0, 1), got {self.value}")
        if kind is CutoffKind.HOROCYCLIC and not self.value > 1.0:
            raise DomainError(f"horocyclic cutoff needs theta > 1, got {self.value}")


def check_C(C: float) -> float:
    if not (C_GUARD < C < 1.0 - C_GUARD):
        raise DomainError(f"C must lie in (0, 1), got {C}")
    return float(C)


@dataclass(frozen=True)
class RegionSpec:
    """A member of the region family.

    ``translation`` is a signed hyperbolic distance along the axis, upward
    positive.  The cutoff is applied to the translated region.  A band
    segment is the half distance band with a mandatory lineal cutoff.
    """

    family: Family
    C: float | None = None
    cutoff: Cutoff | None = None
    translation: float = 0.0

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam is Family.E1:
            if self.C is not None:
                raise DomainError("the horodisk E1 takes no C parameter")
        else:
            if self.C is None:
                raise DomainError(f"family {fam.value} needs a C parameter")
            check_C(self.C)
        if fam is Family.BAND_SEGMENT and (self.cutoff is None or self.cutoff.kind is not CutoffKind.LINEAL):
            raise DomainError("a band segment needs a lineal cutoff")
        if not math.isfinite(self.translation):
            raise DomainError("translation must be finite")


# axis translation -----------------------------------------------------------

def translate_up(x, y, omega: float):
    """Hyperbolic translation by ``omega`` along the y-axis (a boost in the (x2, x3) plane)."""
    ch, sh = math.cosh(omega), math.sinh(omega)
    den = sh * y + ch
    return x / den, (ch * y + sh) / den


# defining forms (<= 0 means inside, before tolerance) -----------------------

def _parabola_form(x, y, C):
    return x * x / (C * C) + 2.0 * y * y - 2.0 * y


def _horodisk_form(x, y):
    return x * x + 2.0 * y * y - 2.0 * y


def _band_forms(x, y, C):
    return x * x / (C * C) + y * y - 1.0, -y


def _triangle_forms(x, y, C):
    return abs(x) - C * (1.0 - y), -y


def _inner_forms(x, y, C):
    s = math.sqrt((1.0 - C) * (1.0 + C))
    return (
        x * x + 2.0 * C * (s * x + C * y) * (y - 1.0),
        x * x + 2.0 * C * (-s * x + C * y) * (y - 1.0),
    )


def _untranslated_contains(fam: Family, C, x, y, tol) -> bool:
    if fam is Family.E:
        return _parabola_form(x, y, C) <= tol
    if fam is Family.E1:
        return _horodisk_form(x, y) <= tol
    if fam in (Family.B, Family.BAND_SEGMENT):
        return all(f <= tol for f in _band_forms(x, y, C))
    if fam is Family.D:
        return all(f <= tol for f in _band_forms(x, y, C)) and _horodisk_form(x, y) <= tol
    if fam is Family.A:
        return all(f <= tol for f in _triangle_forms(x, y, C))
    if fam is Family.V:
        return all(f <= tol for f in _inner_forms(x, y, C))
    raise ValueError(fam)


def contains(r: RegionSpec, p: BckPoint, tol: float = BOUNDARY_TOL) -> bool:
    x, y = p.x, p.y
    if r.cutoff is not None:
        if r.cutoff.kind is CutoffKind.LINEAL:
            if y > r.cutoff.value + tol:
                return False
        elif bck_to_bph(p).y > r.cutoff.value + tol:
            return False
    if r.translation == 0.0:
        return _untranslated_contains(r.family, r.C, x, y, tol)
    if r.family in (Family.B, Family.BAND_SEGMENT):
        # the translated band keeps its hypercycles; only the base line moves
        return x * x / (r.C * r.C) + y * y - 1.0 <= tol and math.tanh(r.translation) - y <= tol
    u, v = translate_up(x, y, -r.translation)
    return _untranslated_contains(r.family, r.C, u, v, tol)


def contains_bph(r: RegionSpec, q: BphPoint, tol: float = BOUNDARY_TOL) -> bool:
    """Membership through the half-plane forms of the (untranslated) regions."""
    if r.translation != 0.0:
        raise NotImplementedError("half-plane forms are given for untranslated regions only")
    x, y = q.x, q.y
    if r.cutoff is not None:
        if r.cutoff.kind is CutoffKind.HOROCYCLIC:
            if y > r.cutoff.value + tol:
                return False
        else:
            eta = r.cutoff.value
            r2 = x * x + y * y
            if (r2 - 1.0) - eta * (r2 + 1.0) > tol:
                return False
    fam = r.family
    if fam is Family.E1:
        return 1.0 - y * y <= tol
    C = r.C
    k = (1.0 - C) * (1.0 + C) / (C * C)
    if fam is Family.E:
        return k * x * x - y * y + 1.0 <= tol
    in_band = k * x * x - y * y <= tol and 1.0 - (x * x + y * y) <= tol
    if fam in (Family.B, Family.BAND_SEGMENT):
        return in_band
    if fam is Family.D:
        return in_band and 1.0 - y <= tol
    if fam is Family.V:
        return 1.0 + math.sqrt(k) * abs(x) - y <= tol
    if fam is Family.A:
        return abs(x) - C <= tol and 1.0 - (x * x + y * y) <= tol
    raise ValueError(fam)


# synthetic elements ------------------------------------------------------------

@dataclass(frozen=True)
class SyntheticElements:
    C: float
    vertex: BckPoint
    axis: np.ndarray  # line coordinates of x = 0
    focus: BckPoint
    asymptotic_point: HomogeneousPoint
    supporting_horocycle: conics.ConicForm
    directrix_horocycle: conics.ConicForm
    focal_distance: float
    focal_distance_log: float
    band_radius: float


def focus_height(C: float) -> float:
    c2 = C * C
    return c2 / (2.0 - c2)


def synthetic_elements(C: float) -> SyntheticElements:
    check_C(C)
    yf = focus_height(C)
    return SyntheticElements(
        C=C,
        vertex=BckPoint(0.0, 0.0),
        axis=np.array([1.0, 0.0, 0.0]),
        focus=BckPoint(0.0, yf),
        asymptotic_point=HomogeneousPoint((0.0, 1.0, 1.0)),
        supporting_horocycle=conics.supporting_horocycle(),
        directrix_horocycle=conics.directrix_horocycle(C),
        focal_distance=math.atanh(yf),
        focal_distance_log=-0.5 * math.log1p(-C * C),
        band_radius=math.atanh(C),
    )


def parabola_point(C: float, t: float) -> BckPoint:
    """Intersection of the parabola with the line ``x + t(y - 1) = 0`` through the asymptotic point."""
    c2 = C * C
    den = 2.0 * c2 + t * t
    return BckPoint(2.0 * t * c2 / den, t * t / den)


def horocycle_point(C: float, t: float) -> BckPoint:
    """Intersection of the directrix horocycle with the same line."""
    c2 = C * C
    den = 2.0 - c2 + t * t
    return BckPoint(2.0 * t / den, (t * t - c2) / den)


def killing_common_value(C: float, t: float) -> tuple[float, float]:
    """The equidistance value as (arcosh form, artanh form)."""
    c2 = C * C
    s2 = (1.0 - C) * (1.0 + C)
    a = c2 * (2.0 - c2) + s2 * t * t
    arg = a / (2.0 * C * math.sqrt(s2 * (c2 + s2 * t * t)))
    return math.acosh(arg), math.atanh((c2 * c2 + s2 * t * t) / a)


def killing_residual(C: float, t: float) -> float:
    """|dist(H(t), P(t)) - dist(P(t), F)|: zero when Killing's focal characterization holds."""
    check_C(C)
    p = parabola_point(C, t)
    h = horocycle_point(C, t)
    f = BckPoint(0.0, focus_height(C))
    return abs(bck_distance(h, p) - bck_distance(p, f))


@dataclass(frozen=True)
class NotableDistances:
    half_ln3: float
    half_ln3_artanh: float
    ln_silver: float
    ln_silver_artanh: float
    ln_silver_arsinh: float
    half_ln2: float
    half_ln2_artanh: float
    anti_axial: float
    anti_axial_arsinh: float
    focal: float
    focal_log: float
    classical_parameter: float
    band_radius: float
    band_radius_log: float
    horocyclic_arc_facing_point: float

    def identity_pairs(self) -> dict[str, tuple[float, float]]:
        return {
            "half_ln3": (self.half_ln3, self.half_ln3_artanh),
            "ln_silver": (self.ln_silver, self.ln_silver_artanh),
            "ln_silver_arsinh": (self.ln_silver, self.ln_silver_arsinh),
            "half_ln2": (self.half_ln2, self.half_ln2_artanh),
            "anti_axial": (self.anti_axial, self.anti_axial_arsinh),
            "focal": (self.focal, self.focal_log),
            "band_radius": (self.band_radius, self.band_radius_log),
        }


def notable_distances(C: float) -> NotableDistances:
    check_C(C)
    c2 = C * C
    ln_silver = math.log1p(math.sqrt(2.0))
    return NotableDistances(
        half_ln3=0.5 * math.log(3.0),
        half_ln3_artanh=math.atanh(0.5),
        ln_silver=ln_silver,
        ln_silver_artanh=math.atanh(math.sqrt(2.0) / 2.0),
        ln_silver_arsinh=math.asinh(1.0),
        half_ln2=0.5 * math.log(2.0),
        half_ln2_artanh=math.atanh(1.0 / 3.0),
        anti_axial=math.atanh(math.sqrt(2.0) * C / 2.0),
        anti_axial_arsinh=math.asinh(math.sqrt(c2 / (2.0 - c2))),
        focal=math.atanh(c2 / (2.0 - c2)),
        focal_log=-0.5 * math.log1p(-c2),
        classical_parameter=math.atanh(c2),
        band_radius=math.atanh(C),
        band_radius_log=0.5 * (math.log1p(C) - math.log1p(-C)),
        # half-chord of the arc is ln(1 + sqrt 2); the arc is 2 sinh of it
        horocyclic_arc_facing_point=2.0 * math.sinh(ln_silver),
    )
