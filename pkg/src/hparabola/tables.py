"""Parameter sweeps of the closed forms as CSV text."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal

from . import closed_forms as cf
from .family import check_C


class SweepError(ValueError):
    """Invalid sweep specification."""


@dataclass(frozen=True)
class SweepSpec:
    C_values: tuple[float, ...]
    quantities: tuple[str, ...]
    output: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "C_values", tuple(float(c) for c in self.C_values))
        object.__setattr__(self, "quantities", tuple(self.quantities))
        if not self.quantities:
            raise SweepError("the quantity list is empty")
        unknown = [q for q in self.quantities if q not in cf.PER_C and q not in cf.SCALARS]
        if unknown:
            raise SweepError(f"unknown quantities {unknown}; known: {sorted(cf.PER_C) + sorted(cf.SCALARS)}")
        scalar = [q in cf.SCALARS for q in self.quantities]
        if any(scalar) and not all(scalar):
            raise SweepError("scalar quantities cannot be mixed with per-C quantities")
        if not all(scalar):
            if not self.C_values:
                raise SweepError("the C list is empty")
            for c in self.C_values:
                try:
                    check_C(c)
                except ValueError as exc:
                    raise SweepError(str(exc)) from exc

    @property
    def scalar_only(self) -> bool:
        return all(q in cf.SCALARS for q in self.quantities)


def fmt(v: float) -> str:
    """Plain decimal with 12 significant digits."""
    if not math.isfinite(v):
        raise SweepError(f"non-finite value {v}")
    return format(Decimal(f"{v:.11e}"), "f")


def default_grid(n: int) -> tuple[float, ...]:
    """``k / (n + 1)`` for ``k = 1..n``; ``n = 9`` gives 0.1, ..., 0.9."""
    if n < 1:
        raise SweepError(f"grid size must be positive, got {n}")
    return tuple(round(k / (n + 1), 12) for k in range(1, n + 1))


def render_csv(spec: SweepSpec) -> str:
    rows = [",".join(("C",) + spec.quantities)]
    if spec.scalar_only:
        rows.append(",".join([""] + [fmt(cf.evaluate(q).value) for q in spec.quantities]))
    else:
        for c in sorted(spec.C_values):
            rows.append(",".join([fmt(c)] + [fmt(cf.evaluate(q, c).value) for q in spec.quantities]))
    return "\n".join(rows) + "\n"
