"""Deterministic SVG renderings of the region boundaries in the three charts.

Curves are sampled from their own parametrizations (never by contouring), so
repeated runs produce byte-identical files.  The ``bck`` chart always shows
the absolute; the ``dual`` chart shows it too, as the reference for polarity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .family import check_C, focus_height

DEFAULT_SAMPLES = 512
CLIP_MARGIN = 0.05


class Chart(str, Enum):
    BCK = "bck"
    BPH = "bph"
    DUAL = "dual"


class FigureError(ValueError):
    """A figure request that cannot be drawn."""


# colours follow the usual convention of the figures: parabola red, band blue
DEFAULT_STYLES = {
    "E": "#d62728",
    "B": "#1f77b4",
    "D": "#2ca02c",
    "V": "#9467bd",
    "A": "#ff7f0e",
    "E1": "#000000",
    "copolar_E": "#d62728",
    "copolar_B": "#1f77b4",
}

DEFAULT_VIEWPORTS = {
    Chart.BCK: (-1.05, 1.05, -1.05, 1.05),
    Chart.BPH: (-3.0, 3.0, 0.0, 4.0),
    Chart.DUAL: (-3.0, 3.0, -2.0, 1.5),
}


@dataclass(frozen=True)
class Layer:
    name: str
    style: str = ""

    @property
    def stroke(self) -> str:
        return self.style or DEFAULT_STYLES.get(self.name, "#000000")


@dataclass(frozen=True)
class FigureSpec:
    chart: Chart
    layers: tuple[Layer, ...]
    C: float
    viewport: tuple[float, float, float, float] = field(default=(-1.05, 1.05, -1.05, 1.05))
    samples_per_curve: int = DEFAULT_SAMPLES

    def __post_init__(self):
        try:
            chart = Chart(self.chart)
        except ValueError as exc:
            raise FigureError(f"unknown chart {self.chart!r}") from exc
        object.__setattr__(self, "chart", chart)
        layers = tuple(l if isinstance(l, Layer) else Layer(str(l)) for l in self.layers)
        object.__setattr__(self, "layers", layers)
        if not layers:
            raise FigureError("at least one layer is needed")
        unknown = [l.name for l in layers if l.name not in LAYERS[chart]]
        if unknown:
            raise FigureError(f"layers {unknown} are not available in the {chart.value} chart; "
                              f"choose from {sorted(LAYERS[chart])}")
        try:
            check_C(self.C)
        except ValueError as exc:
            raise FigureError(str(exc)) from exc
        x0, x1, y0, y1 = self.viewport
        if not (x0 < x1 and y0 < y1):
            raise FigureError(f"empty viewport {self.viewport}")
        if self.samples_per_curve < 16:
            raise FigureError("samples_per_curve must be at least 16")


# sampled boundaries -------------------------------------------------------------
# every builder returns a list of (n, 2) arrays in chart coordinates

def _join(*pieces):
    return np.concatenate(pieces, axis=0)


def _ellipse_disk(C, n):
    # x^2/C^2 + 2y^2 - 2y = 0
    phi = np.linspace(0.0, 2.0 * math.pi, n)
    return [np.column_stack([C / math.sqrt(2.0) * np.cos(phi), 0.5 * (1.0 + np.sin(phi))])]


def _bck_band(C, n):
    psi = np.linspace(0.0, 0.5 * math.pi, n)
    right = np.column_stack([C * np.cos(psi), np.sin(psi)])
    left = right[::-1] * np.array([-1.0, 1.0])
    return [_join(left, right)]


def _bck_d(C, n):
    yf = focus_height(C)
    phi = np.linspace(-0.5 * math.pi, math.asin(2.0 * yf - 1.0), n)
    horo = np.column_stack([np.cos(phi) / math.sqrt(2.0), 0.5 * (1.0 + np.sin(phi))])
    psi = np.linspace(math.asin(yf), 0.5 * math.pi, n)[1:]
    hyper = np.column_stack([C * np.cos(psi), np.sin(psi)])
    right = _join(horo, hyper)
    left = right[::-1] * np.array([-1.0, 1.0])
    return [_join(left, right[1:])]


def _half_plane_to_disk(xh, yh):
    r2 = xh * xh + yh * yh
    return np.column_stack([2.0 * xh / (r2 + 1.0), (r2 - 1.0) / (r2 + 1.0)])


def _wedge_slope(C):
    return math.sqrt((1.0 - C) * (1.0 + C)) / C


def _bck_v(C, n):
    phi = np.linspace(-0.5 * math.pi, 0.5 * math.pi, n)[1:-1]
    t = np.tan(phi)
    pts = _half_plane_to_disk(t, 1.0 + _wedge_slope(C) * np.abs(t))
    return [_join(np.array([[0.0, 1.0]]), pts, np.array([[0.0, 1.0]]))]


def _bck_a(C, n):
    return [np.array([[0.0, 1.0], [-C, 0.0], [C, 0.0], [0.0, 1.0]])]


def _unit_arc(a0, a1, n):
    a = np.linspace(a0, a1, n)
    return np.column_stack([np.cos(a), np.sin(a)])


def _bph_e(C, n, vp):
    k = ((1.0 - C) * (1.0 + C)) / (C * C)
    x = np.linspace(vp[0], vp[1], n)
    return [np.column_stack([x, np.sqrt(1.0 + k * x * x)])]


def _bph_e1(C, n, vp):
    x = np.linspace(vp[0], vp[1], n)
    return [np.column_stack([x, np.ones_like(x)])]


def _ray(x_start, slope, y_top, n, sign):
    x_end = max(abs(x_start), y_top / slope)
    x = np.linspace(abs(x_start), x_end, n)
    return np.column_stack([sign * x, slope * x])


def _bph_b(C, n, vp):
    m = math.sqrt((1.0 - C) * (1.0 + C)) / C
    top = vp[3] * (1.0 + CLIP_MARGIN)
    right = _ray(C, m, top, n, 1.0)
    left = _ray(C, m, top, n, -1.0)[::-1]
    a = math.atan2(m * C, C)
    return [_join(left, _unit_arc(math.pi - a, a, n)[1:-1], right)]


def _bph_d(C, n, vp):
    m = math.sqrt((1.0 - C) * (1.0 + C)) / C
    top = vp[3] * (1.0 + CLIP_MARGIN)
    x0 = 1.0 / m
    right = _ray(x0, m, top, n, 1.0)
    left = _ray(x0, m, top, n, -1.0)[::-1]
    return [_join(left, right)]


def _bph_v(C, n, vp):
    m = _wedge_slope(C)
    top = vp[3] * (1.0 + CLIP_MARGIN)
    x = np.linspace(0.0, max((top - 1.0) / m, 0.0), n)
    right = np.column_stack([x, 1.0 + m * x])
    left = right[::-1] * np.array([-1.0, 1.0])
    return [_join(left, right[1:])]


def _bph_a(C, n, vp):
    s = math.sqrt((1.0 - C) * (1.0 + C))
    top = max(vp[3] * (1.0 + CLIP_MARGIN), s)
    y = np.linspace(s, top, n)
    right = np.column_stack([np.full_like(y, C), y])
    left = right[::-1] * np.array([-1.0, 1.0])
    a = math.atan2(s, C)
    return [_join(left, _unit_arc(math.pi - a, a, n)[1:-1], right)]


def _dual_e(C, n, vp):
    x = np.linspace(vp[0], vp[1], n)
    return [np.column_stack([x, 1.0 - 0.5 * C * C * x * x])]


def _dual_b(C, n, vp):
    # hypercycle dual for y >= 0, then the polars x = -+1/C of the base vertices
    bottom = min(vp[2] * (1.0 + CLIP_MARGIN), -CLIP_MARGIN)
    y = np.linspace(bottom, 0.0, n)
    phi = np.linspace(math.pi, 0.0, n)[1:-1]
    arc = np.column_stack([np.cos(phi) / C, np.sin(phi)])
    left = np.column_stack([np.full_like(y, -1.0 / C), y])
    right = left[::-1] * np.array([-1.0, 1.0])
    return [_join(left, arc, right)]


def _wrap_disk(builder):
    return lambda C, n, vp: builder(C, n)


LAYERS = {
    Chart.BCK: {
        "E": _wrap_disk(_ellipse_disk),
        "E1": _wrap_disk(lambda C, n: _ellipse_disk(1.0, n)),
        "B": _wrap_disk(_bck_band),
        "D": _wrap_disk(_bck_d),
        "V": _wrap_disk(_bck_v),
        "A": _wrap_disk(_bck_a),
    },
    Chart.BPH: {"E": _bph_e, "E1": _bph_e1, "B": _bph_b, "D": _bph_d, "V": _bph_v, "A": _bph_a},
    Chart.DUAL: {"copolar_E": _dual_e, "copolar_B": _dual_b},
}


def sample_layers(spec: FigureSpec) -> dict[str, list[np.ndarray]]:
    """Unclipped samples of every layer, keyed by layer name."""
    table = LAYERS[spec.chart]
    return {l.name: table[l.name](spec.C, spec.samples_per_curve, spec.viewport) for l in spec.layers}


def _clip(poly: np.ndarray, vp) -> list[np.ndarray]:
    x0, x1, y0, y1 = vp
    mx, my = CLIP_MARGIN * (x1 - x0), CLIP_MARGIN * (y1 - y0)
    inside = (poly[:, 0] >= x0 - mx) & (poly[:, 0] <= x1 + mx) & (poly[:, 1] >= y0 - my) & (poly[:, 1] <= y1 + my)
    runs, start = [], None
    for i, ok in enumerate(inside):
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            runs.append(poly[start:i])
            start = None
    if start is not None:
        runs.append(poly[start:])
    return [r for r in runs if len(r) >= 2]


def _num(v: float) -> str:
    return f"{round(float(v), 6) + 0.0:.6f}"  # no "-0.000000"


def _path_data(polys) -> str:
    parts = []
    for poly in polys:
        pts = [f"{_num(x)},{_num(-y)}" for x, y in poly]
        parts.append("M" + " L".join(pts))
    return " ".join(parts)


def render_svg(spec: FigureSpec, width: int = 512) -> str:
    x0, x1, y0, y1 = spec.viewport
    height = int(round(width * (y1 - y0) / (x1 - x0)))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{x0:.6f} {-y1:.6f} {x1 - x0:.6f} {y1 - y0:.6f}">',
        f'<title>{spec.chart.value} chart, C = {spec.C:.6f}</title>',
        '<g fill="none" stroke-width="1.5" stroke-linejoin="round">',
    ]
    if spec.chart in (Chart.BCK, Chart.DUAL):
        circle = [_unit_arc(0.0, 2.0 * math.pi, spec.samples_per_curve)]
        lines.append(f'<path id="absolute" stroke="#7f7f7f" vector-effect="non-scaling-stroke" '
                     f'd="{_path_data(circle)}"/>')
    samples = sample_layers(spec)
    for layer in spec.layers:
        polys = [c for poly in samples[layer.name] for c in _clip(poly, spec.viewport)]
        lines.append(f'<path id="layer-{layer.name}" stroke="{layer.stroke}" vector-effect="non-scaling-stroke" '
                     f'd="{_path_data(polys)}"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)
