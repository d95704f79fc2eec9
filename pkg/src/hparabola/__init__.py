"""Areas and boundary lengths of the h-elliptic parabola, with an independent quadrature oracle.

Modules:

* :mod:`.models`: disk and half-plane charts with their distances and densities
* :mod:`.conics`: projective conic forms with their pencils and polars
* :mod:`.family`: the parabola and its comparison regions
* :mod:`.closed_forms`: evaluated areas and lengths, plus the matching translations
* :mod:`.sds`: co-polar regions in the exterior of the absolute
* :mod:`.quadrature`: adaptive Gauss-Kronrod oracle (never calls the closed forms)
* :mod:`.checks`, :mod:`.tables`, :mod:`.figures`, :mod:`.cli`: the verification tool
"""

from .family import Cutoff, CutoffKind, Family, RegionSpec, contains, contains_bph
from .models import BckPoint, BphPoint, DomainError, HomogeneousPoint, bck_distance, bph_distance
from .quadrature import OracleResult, QuadratureConfig
from .sds import SdsRegion, SdsTag

__version__ = "0.1.0"

__all__ = [
    "BckPoint", "BphPoint", "Cutoff", "CutoffKind", "DomainError", "Family", "HomogeneousPoint",
    "OracleResult", "QuadratureConfig", "RegionSpec", "SdsRegion", "SdsTag",
    "bck_distance", "bph_distance", "contains", "contains_bph",
]
