"""Independent numerical oracle: adaptive Gauss-Kronrod quadrature of the area
densities and length integrands over the region family.

Nothing here evaluates a closed-form area or length; regions enter only
through their boundary curves.  Infinite ranges are mapped onto finite ones
by ``x = a + (1 - t)/t``; endpoints where the integrand has a square-root
behaviour are removed by ``y = t^2`` or ``y = 1 - u^2`` substitutions.

1-D integrals use a globally adaptive 15-point Kronrod rule with the 7-point
Gauss error estimate.  Iterated 2-D integrals run the same rule on the outer
variable and a row-batched locally adaptive version for all inner integrals
requested by one outer rule evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .family import Cutoff, CutoffKind, Family, RegionSpec, check_C
from .models import hyp_density_xy, hyp_speed_xy, sds_density_xy, sds_speed_xy
from .sds import SdsRegion, SdsTag

# Kronrod abscissae (descending, last is the centre) and weights; Gauss weights for xgk[1], xgk[3], xgk[5], 0
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
W_KRONROD = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
W_GAUSS = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    W_GAUSS[_i] = W_GAUSS[14 - _i] = _w
W_GAUSS[7] = _WG[3]

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_depth: int = 60
    cutoff_schedule: tuple[float, ...] = tuple(1.0 - 10.0 ** -k for k in range(1, 7))
    max_intervals: int = 4000

    def __post_init__(self):
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_depth < 10:
            raise ValueError("max_depth must be at least 10")

    def tolerance(self, value: float) -> float:
        return max(self.rel_tol * abs(value), self.abs_tol)

    def tightened(self, factor: float) -> "QuadratureConfig":
        return QuadratureConfig(self.rel_tol * factor, self.abs_tol * factor, self.max_depth,
                                self.cutoff_schedule, self.max_intervals)


@dataclass(frozen=True)
class OracleResult:
    value: float
    error_estimate: float
    subdivisions: int
    converged: bool

    def __add__(self, other: "OracleResult") -> "OracleResult":
        return OracleResult(self.value + other.value, self.error_estimate + other.error_estimate,
                            self.subdivisions + other.subdivisions, self.converged and other.converged)

    def __sub__(self, other: "OracleResult") -> "OracleResult":
        return OracleResult(self.value - other.value, self.error_estimate + other.error_estimate,
                            self.subdivisions + other.subdivisions, self.converged and other.converged)

    def scaled(self, k: float) -> "OracleResult":
        return OracleResult(k * self.value, abs(k) * self.error_estimate, self.subdivisions, self.converged)


# the rule -------------------------------------------------------------------------

def _kronrod(fvals: np.ndarray, half: np.ndarray):
    """Apply the 15-point rule row-wise; returns (integral, error estimate)."""
    k = fvals @ W_KRONROD
    g = fvals @ W_GAUSS
    resabs = np.abs(fvals) @ W_KRONROD
    mean = 0.5 * k
    resasc = np.abs(fvals - mean[:, None]) @ W_KRONROD
    err = np.abs((k - g) * half)
    resasc = resasc * np.abs(half)
    resabs = resabs * np.abs(half)
    scaled = np.where((resasc != 0.0) & (err != 0.0),
                      resasc * np.minimum(1.0, (200.0 * err / np.where(resasc == 0.0, 1.0, resasc)) ** 1.5),
                      err)
    floor = np.where(resabs > _TINY / (50.0 * _EPS), 50.0 * _EPS * resabs, 0.0)
    return k * half, np.maximum(scaled, floor)


class _Mapping:
    """Map an interval with possibly infinite ends onto a finite parameter range."""

    def __init__(self, a: float, b: float):
        self.a, self.b = a, b
        fa, fb = math.isfinite(a), math.isfinite(b)
        if fa and fb:
            self.kind, self.range = "finite", (a, b)
        elif fa:
            self.kind, self.range = "upper", (0.0, 1.0)
        elif fb:
            self.kind, self.range = "lower", (0.0, 1.0)
        else:
            self.kind, self.range = "both", (-1.0, 1.0)

    def __call__(self, t):
        if self.kind == "finite":
            return t, np.ones_like(t)
        if self.kind == "upper":
            return self.a + (1.0 - t) / t, 1.0 / (t * t)
        if self.kind == "lower":
            return self.b - (1.0 - t) / t, 1.0 / (t * t)
        # x = t / (1 - t^2) on (-1, 1)
        d = 1.0 - t * t
        return t / d, (1.0 + t * t) / (d * d)


def integrate(f: Callable, a: float, b: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Globally adaptive integral of a vectorized ``f`` over ``[a, b]`` (ends may be infinite).

    ``f`` may return either values or a pair ``(values, inner_errors)``; the
    latter lets iterated integrals propagate their inner error estimates.
    """
    if a == b:
        return OracleResult(0.0, 0.0, 0, True)
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    mapping = _Mapping(a, b)

    def g(t):
        x, jac = mapping(t)
        out = f(x)
        if isinstance(out, tuple):
            vals, errs = out
        else:
            vals, errs = out, np.zeros_like(x)
        vals = np.where(jac == 0.0, 0.0, vals * jac)
        return vals, np.abs(errs * jac)

    lo, hi = mapping.range
    los, his = np.array([lo]), np.array([hi])
    depth = np.array([0])
    vals, errs = _evaluate(g, los, his)
    n_eval = 1
    converged = False
    while True:
        tol = cfg.tolerance(vals.sum())
        if errs.sum() <= tol:
            converged = True
            break
        # split the worst intervals until the untouched ones hold at most half the budget
        order = np.argsort(-errs)
        rest = np.cumsum(errs[order][::-1])[::-1]
        small = rest <= 0.5 * tol
        n_split = int(np.argmax(small)) if small.any() else len(order)
        chosen = order[:max(1, n_split)]
        chosen = chosen[depth[chosen] < cfg.max_depth]
        if chosen.size == 0 or n_eval + 2 * chosen.size > cfg.max_intervals:
            break
        keep = np.ones(len(los), dtype=bool)
        keep[chosen] = False
        mids = 0.5 * (los[chosen] + his[chosen])
        new_lo = np.concatenate([los[chosen], mids])
        new_hi = np.concatenate([mids, his[chosen]])
        new_depth = np.concatenate([depth[chosen], depth[chosen]]) + 1
        nv, ne = _evaluate(g, new_lo, new_hi)
        n_eval += 2 * chosen.size
        los = np.concatenate([los[keep], new_lo])
        his = np.concatenate([his[keep], new_hi])
        depth = np.concatenate([depth[keep], new_depth])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])
    return OracleResult(sign * float(vals.sum()), float(errs.sum()), n_eval, converged)


def _evaluate(g, los, his):
    half = 0.5 * (his - los)
    centre = 0.5 * (his + los)
    t = centre[:, None] + half[:, None] * NODES[None, :]
    vals, inner_errs = g(t)
    k, err = _kronrod(vals, half)
    err = err + np.abs(half) * (inner_errs @ W_KRONROD)
    return k, err


def integrate_rows(f: Callable, ys: np.ndarray, lo: np.ndarray, hi: np.ndarray,
                   rel_tol: float, abs_tol: float | np.ndarray, max_depth: int = 60,
                   max_rounds: int = 60, scale: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray, bool]:
    """Many 1-D integrals ``int_{lo_i}^{hi_i} f(x, y_i) dx`` at once, each refined locally.

    Ends may be infinite (row-wise); an infinite end is reached through
    ``x = end +- scale_i (1 - t)/t`` so that features at distance ``scale_i``
    from the finite end do not collapse into ``t ~ 0``.  Returns values,
    error estimates and a convergence flag for the whole batch.
    """
    ys, lo, hi = (np.asarray(v, dtype=float).ravel() for v in (ys, lo, hi))
    abs_tol = np.broadcast_to(np.asarray(abs_tol, dtype=float), ys.shape)
    sc = np.ones_like(ys) if scale is None else np.broadcast_to(np.asarray(scale, dtype=float), ys.shape)
    n = ys.size
    kind = np.zeros(n, dtype=int)
    kind[~np.isfinite(hi) & np.isfinite(lo)] = 1
    kind[~np.isfinite(lo) & np.isfinite(hi)] = 2
    if np.any(~np.isfinite(lo) & ~np.isfinite(hi)):
        raise ValueError("doubly infinite inner ranges are not supported")
    ta = np.where(kind == 0, lo, 0.0)
    tb = np.where(kind == 0, hi, 1.0)
    flip = (kind == 0) & (tb < ta)
    ta, tb = np.where(flip, tb, ta), np.where(flip, ta, tb)
    sgn = np.where(flip, -1.0, 1.0)
    row_width = tb - ta
    base_lo = np.where(np.isfinite(lo), lo, 0.0)
    base_hi = np.where(np.isfinite(hi), hi, 0.0)

    def g(rows, t):
        with np.errstate(divide="ignore", invalid="ignore"):
            return _g(rows, t)

    def _g(rows, t):
        k = kind[rows][:, None]
        tt = np.where(k == 0, t, np.maximum(t, _TINY))
        L = sc[rows][:, None]
        x = np.where(k == 0, tt,
                     np.where(k == 1, base_lo[rows][:, None] + L * (1.0 - tt) / tt,
                              base_hi[rows][:, None] - L * (1.0 - tt) / tt))
        jac = np.where(k == 0, 1.0, L / (tt * tt))
        yy = np.broadcast_to(ys[rows][:, None], x.shape)
        v = f(x, yy) * jac
        return np.where(np.isfinite(jac) & (jac != 0.0), v, 0.0)

    rows = np.arange(n)
    a_, b_ = ta.copy(), tb.copy()
    depth = np.zeros(n, dtype=int)
    live = row_width > 0.0
    rows, a_, b_, depth = rows[live], a_[live], b_[live], depth[live]
    acc_v = np.zeros(n)
    acc_e = np.zeros(n)
    converged = True
    for _ in range(max_rounds):
        if rows.size == 0:
            break
        half = 0.5 * (b_ - a_)
        t = 0.5 * (a_ + b_)[:, None] + half[:, None] * NODES[None, :]
        k, err = _kronrod(g(rows, t), half)
        row_v = acc_v + np.bincount(rows, k, minlength=n)
        row_e = acc_e + np.bincount(rows, err, minlength=n)
        row_tol = np.maximum(rel_tol * np.abs(row_v), abs_tol)
        row_ok = row_e <= row_tol
        share = row_tol[rows] * (b_ - a_) / np.where(row_width[rows] > 0, row_width[rows], 1.0)
        split = (~row_ok[rows]) & (err > share)
        stuck = split & (depth >= max_depth)
        if np.any(stuck):
            converged = False
            split &= ~stuck
        if not np.any(split):
            acc_v, acc_e = row_v, row_e
            rows = rows[:0]
            break
        done = ~split
        acc_v += np.bincount(rows[done], k[done], minlength=n)
        acc_e += np.bincount(rows[done], err[done], minlength=n)
        mids = 0.5 * (a_[split] + b_[split])
        rows = np.concatenate([rows[split], rows[split]])
        a_, b_ = np.concatenate([a_[split], mids]), np.concatenate([mids, b_[split]])
        depth = np.concatenate([depth[split], depth[split]]) + 1
    else:
        converged = False
        if rows.size:
            half = 0.5 * (b_ - a_)
            t = 0.5 * (a_ + b_)[:, None] + half[:, None] * NODES[None, :]
            k, err = _kronrod(g(rows, t), half)
            acc_v += np.bincount(rows, k, minlength=n)
            acc_e += np.bincount(rows, err, minlength=n)
    return sgn * acc_v, acc_e, converged


def integrate_2d(f: Callable, outer_a: float, outer_b: float, inner_lo: Callable, inner_hi: Callable,
                 cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """``int_{outer_a}^{outer_b} int_{inner_lo(y)}^{inner_hi(y)} f(x, y) dx dy`` by iterated adaptive quadrature.

    Infinite inner ranges are mapped with length scale ``max(1, |y|)``, which
    matches integrands that decay like powers of ``x^2 + y^2``.
    """
    status = {"converged": True}
    inner_rel, inner_abs = 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol

    def outer(y):
        shape = y.shape
        yy = y.ravel()
        lo = np.broadcast_to(inner_lo(yy), yy.shape)
        hi = np.broadcast_to(inner_hi(yy), yy.shape)
        scale = np.maximum(1.0, np.abs(yy))
        # the outer map to infinity multiplies inner errors by about y^2
        v, e, ok = integrate_rows(f, yy, lo, hi, inner_rel, inner_abs / scale**2, cfg.max_depth, scale=scale)
        status["converged"] &= ok
        return v.reshape(shape), e.reshape(shape)

    res = integrate(outer, outer_a, outer_b, cfg)
    return OracleResult(res.value, res.error_estimate, res.subdivisions, res.converged and status["converged"])


# curves and lengths ------------------------------------------------------------------

@dataclass(frozen=True)
class Curve:
    """A parametrized arc ``t -> pos(t)`` on ``[a, b]`` with derivative ``vel``."""

    pos: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]
    vel: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]
    a: float
    b: float


def _len(curve: Curve, speed, cfg) -> OracleResult:
    def f(t):
        x, y = curve.pos(t)
        vx, vy = curve.vel(t)
        return speed(x, y, vx, vy)

    return integrate(f, curve.a, curve.b, cfg)


def quad_len_hyp(curve: Curve, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return _len(curve, hyp_speed_xy, cfg)


def quad_len_sds(curve: Curve, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return _len(curve, sds_speed_xy, cfg)


def quad_len_bph(curve: Curve, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return _len(curve, lambda x, y, vx, vy: np.hypot(vx, vy) / y, cfg)


def band_arc(C: float, eta: float) -> Curve:
    """Right hypercyclic arc ``(C sqrt(1 - t^2), t)``, ``0 <= t <= eta``."""
    return Curve(
        lambda t: (C * np.sqrt((1.0 - t) * (1.0 + t)), t),
        lambda t: (-C * t / np.sqrt((1.0 - t) * (1.0 + t)), np.ones_like(t)),
        0.0, eta,
    )


def parabola_arc(C: float, eta: float) -> Curve:
    """Right half of the parabola ``(C sqrt(2y(1-y)), y)`` with ``y = u^2``, ``0 <= u <= sqrt(eta)``."""
    return Curve(
        lambda u: (C * u * np.sqrt(2.0 * (1.0 - u * u)), u * u),
        lambda u: (C * np.sqrt(2.0) * (1.0 - 2.0 * u * u) / np.sqrt(1.0 - u * u), 2.0 * u),
        0.0, math.sqrt(eta),
    )


def horizontal_segment(x0: float, x1: float, y: float) -> Curve:
    return Curve(lambda t: (t, np.full_like(t, y)), lambda t: (np.ones_like(t), np.zeros_like(t)), x0, x1)


def circle(radius: float) -> Curve:
    return Curve(
        lambda t: (radius * np.cos(t), radius * np.sin(t)),
        lambda t: (-radius * np.sin(t), radius * np.cos(t)),
        0.0, 2.0 * math.pi,
    )


def quad_len_band_boundary(C: float, eta: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Both hypercyclic arcs of the cut band plus its base chord."""
    arc = quad_len_hyp(band_arc(C, eta), cfg)
    base = quad_len_hyp(horizontal_segment(-C, C, 0.0), cfg)
    return arc.scaled(2.0) + base


def quad_len_parabola_boundary(C: float, eta: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return quad_len_hyp(parabola_arc(C, eta), cfg).scaled(2.0)


def quad_len_horocycle_boundary(eta: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return quad_len_parabola_boundary(1.0, eta, cfg)


def quad_len_M(C: float, eta: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """The two cut pieces at height eta between the parabola and the band."""
    x0 = C * math.sqrt(2.0 * eta * (1.0 - eta))
    x1 = C * math.sqrt((1.0 - eta) * (1.0 + eta))
    return quad_len_hyp(horizontal_segment(x0, x1, eta), cfg).scaled(2.0)


# hyperbolic areas ----------------------------------------------------------------------

def _hyp(x, y):
    return hyp_density_xy(x, y)


def _strip_area(half_width: Callable, y0: float, y1: float, cfg, sqrt_start: bool = False) -> OracleResult:
    """Area of ``{|x| <= half_width(y), y0 <= y <= y1}`` (substituting ``y = t^2`` when ``sqrt_start``)."""
    if y1 <= y0:
        return OracleResult(0.0, 0.0, 0, True)
    if sqrt_start:
        def f(x, t):
            return 2.0 * t * _hyp(x, t * t)

        return integrate_2d(f, math.sqrt(y0), math.sqrt(y1),
                            lambda t: -half_width(t * t), lambda t: half_width(t * t), cfg)
    return integrate_2d(_hyp, y0, y1, lambda y: -half_width(y), lambda y: half_width(y), cfg)


def _band_half_width(C):
    return lambda y: C * np.sqrt((1.0 - y) * (1.0 + y))


def _parabola_half_width(C):
    return lambda y: C * np.sqrt(2.0 * y * (1.0 - y))


def quad_area_hyp(r: RegionSpec, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Hyperbolic area of a family member by iterated quadrature of the disk density.

    Supported: lineally cut ``B``/band segments, ``E``, ``E1`` and ``D``, and
    the triangle ``A`` (finite without a cutoff).
    """
    if r.translation != 0.0:
        raise ValueError("translated regions are not supported by the area oracle")
    fam = r.family
    if fam is Family.A:
        if r.cutoff is not None:
            raise ValueError("the triangle oracle takes no cutoff")
        return _triangle_area(r.C, cfg)
    if r.cutoff is None or r.cutoff.kind is not CutoffKind.LINEAL:
        raise ValueError(f"family {fam.value} needs a lineal cutoff for the area oracle")
    eta = r.cutoff.value
    if fam in (Family.B, Family.BAND_SEGMENT):
        return _strip_area(_band_half_width(r.C), 0.0, eta, cfg)
    if fam is Family.E:
        return _strip_area(_parabola_half_width(r.C), 0.0, eta, cfg, sqrt_start=True)
    if fam is Family.E1:
        return _strip_area(_parabola_half_width(1.0), 0.0, eta, cfg, sqrt_start=True)
    if fam is Family.D:
        c2 = r.C * r.C
        y_meet = c2 / (2.0 - c2)  # the horocycle and the hypercycle cross here
        low = _strip_area(_parabola_half_width(1.0), 0.0, min(eta, y_meet), cfg, sqrt_start=True)
        if eta <= y_meet:
            return low
        return low + _strip_area(_band_half_width(r.C), y_meet, eta, cfg)
    raise ValueError(f"family {fam.value} is not supported by the area oracle")


def _triangle_area(C: float, cfg) -> OracleResult:
    # y = 1 - u^2 keeps 1 - y exact and removes the inverse square root at the ideal vertex
    def f(x, u):
        omy = u * u
        return 2.0 * u * hyp_density_xy(x, 1.0 - omy, one_minus_y=omy)

    return integrate_2d(f, 0.0, 1.0, lambda u: -C * u * u, lambda u: C * u * u, cfg)


def quad_area_band_up_minus_parabola(C: float, omega: float,
                                     cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Area of the band raised by ``omega`` minus the parabolic disk (above ``tanh omega``)."""
    check_C(C)
    y0 = math.tanh(omega)
    if not 0.0 <= y0 < 1.0:
        raise ValueError("the raised band must start inside [0, 1)")

    def f(x, u):
        omy = u * u
        return 2.0 * u * hyp_density_xy(x, 1.0 - omy, one_minus_y=omy)

    def lo(u):
        omy = u * u
        return C * np.sqrt(2.0 * (1.0 - omy) * omy)

    def hi(u):
        omy = u * u
        return C * np.sqrt(omy * (2.0 - omy))

    return integrate_2d(f, 0.0, math.sqrt(1.0 - y0), lo, hi, cfg).scaled(2.0)


def quad_area_parabola_below(C: float, y0: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return quad_area_hyp(RegionSpec(Family.E, C, Cutoff(CutoffKind.LINEAL, y0)), cfg)


def quad_band_ratio(C: float, cfg: QuadratureConfig = QuadratureConfig()) -> tuple[float, OracleResult, OracleResult]:
    """``Area(B_up \\ E) / Area(E \\ B_up)`` for the band raised to the focus, with both parts."""
    c2 = C * C
    y_f = c2 / (2.0 - c2)
    outside = quad_area_band_up_minus_parabola(C, math.atanh(y_f), cfg)
    inside = quad_area_parabola_below(C, y_f, cfg)
    return outside.value / inside.value, outside, inside


def quad_disk_area(R: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Area of the origin-centred disk of radius R in polar coordinates."""
    rho = math.tanh(R)
    return integrate_2d(lambda r, th: r * (1.0 - r) ** -1.5 * (1.0 + r) ** -1.5,
                        0.0, 2.0 * math.pi, lambda th: np.zeros_like(th), lambda th: np.full_like(th, rho), cfg)


def quad_disk_circumference(R: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return quad_len_hyp(circle(math.tanh(R)), cfg)


# half-plane areas ------------------------------------------------------------------

def quad_area_bph(kind: str, C: float, theta: float = math.inf,
                  cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Half-plane area of ``D\\E``, ``D\\V`` or ``E\\V`` (``kind`` in {"D-E", "D-V", "E-V"}) below ``y <= theta``.

    With ``sigma = 1/y`` the density ``dx dy / y^2`` becomes ``dx dsigma``, so
    the infinite strip maps to ``0 < sigma <= 1``.
    """
    check_C(C)
    k = C / math.sqrt((1.0 - C) * (1.0 + C))
    widths = {
        "D": lambda y: k * y,
        "E": lambda y: k * np.sqrt((y - 1.0) * (y + 1.0)),
        "V": lambda y: k * (y - 1.0),
    }
    outer_name, inner_name = kind.split("-")
    w_out, w_in = widths[outer_name], widths[inner_name]
    s_min = 0.0 if math.isinf(theta) else 1.0 / theta
    one = lambda x, sig: np.ones_like(x)
    res = integrate_2d(one, s_min, 1.0, lambda sig: w_in(1.0 / sig), lambda sig: w_out(1.0 / sig), cfg)
    return res.scaled(2.0)


def quad_len_bph_diff_D_minus_E(C: float, theta: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    """Horocyclically cut boundary of ``D`` minus that of ``E`` in the half-plane."""
    k = C / math.sqrt((1.0 - C) * (1.0 + C))
    ray = Curve(lambda y: (k * y, y), lambda y: (np.full_like(y, k), np.ones_like(y)), 1.0, theta)
    top = Curve(lambda x: (x, np.ones_like(x)), lambda x: (np.ones_like(x), np.zeros_like(x)), 0.0, k)
    # E's branch x = k sqrt(y^2 - 1), with y = cosh(v) to remove the vertical tangent at y = 1
    hyper = Curve(lambda v: (k * np.sinh(v), np.cosh(v)), lambda v: (k * np.cosh(v), np.sinh(v)),
                  0.0, math.acosh(theta))
    d = quad_len_bph(ray, cfg) + quad_len_bph(top, cfg)
    return (d - quad_len_bph(hyper, cfg)).scaled(2.0)


# Study-de Sitter areas ----------------------------------------------------------------

def _sds(x, y):
    return sds_density_xy(x, y)


def quad_area_sds(r: SdsRegion, cfg: QuadratureConfig = QuadratureConfig(), order: str = "xy") -> OracleResult:
    """SdS area of an exterior region; ``order="xy"`` integrates x innermost, ``"yx"`` y innermost."""
    C, eta = r.C, r.eta
    m = -1.0 if r.side < 0 else 1.0  # mirror: negative side is x <= 0
    tag = r.tag

    def mirrored(lo_fn, hi_fn):
        # bounds given for the x <= 0 piece; reflect them for the other side
        if m < 0:
            return lo_fn, hi_fn
        return (lambda y: -hi_fn(y)), (lambda y: -lo_fn(y))

    if tag is SdsTag.DISK:
        rho = 1.0 / C
        return integrate_2d(lambda rr, th: rr * (rr - 1.0) ** -1.5 * (rr + 1.0) ** -1.5,
                            0.0, 2.0 * math.pi, lambda th: np.full_like(th, rho),
                            lambda th: np.full_like(th, np.inf), cfg)
    if order not in ("xy", "yx"):
        raise ValueError(f"order must be 'xy' or 'yx', got {order!r}")
    if tag is SdsTag.W:
        if order == "xy":
            lo, hi = mirrored(lambda y: np.full_like(y, -np.inf), lambda y: -np.sqrt((1.0 - y) * (1.0 + y)) / C)
            return integrate_2d(_sds, 0.0, eta, lo, hi, cfg)
        # y inner: left of -1/C the full strip, between -1/C and the cut the ellipse bounds y from below
        x_cut = -math.sqrt((1.0 - eta) * (1.0 + eta)) / C
        g = lambda y, x: _sds(x, y)
        far = _x_outer(g, m, -math.inf, -1.0 / C,
                       lambda x: np.zeros_like(x), lambda x: np.full_like(x, eta), cfg)
        near = _x_outer(g, m, -1.0 / C, x_cut,
                        lambda x: np.sqrt(np.maximum((1.0 - C * x) * (1.0 + C * x), 0.0)),
                        lambda x: np.full_like(x, eta), cfg)
        return far + near
    if tag is SdsTag.E:
        if order == "xy":
            lo, hi = mirrored(lambda y: np.full_like(y, -np.inf), lambda y: -np.sqrt(2.0 * (1.0 - y)) / C)
            return integrate_2d(_sds, -math.inf, eta, lo, hi, cfg)
        x_cut = -math.sqrt(2.0 * (1.0 - eta)) / C
        g = lambda y, x: _sds(x, y)
        return _x_outer(g, m, -math.inf, x_cut, lambda x: 1.0 - 0.5 * C * C * x * x,
                        lambda x: np.full_like(x, eta), cfg)
    if tag is SdsTag.Z:
        if order == "xy":
            lo, hi = mirrored(lambda y: np.full_like(y, -np.inf), lambda y: np.full_like(y, -1.0 / C))
            return integrate_2d(_sds, -math.inf, 0.0, lo, hi, cfg)
        g = lambda y, x: _sds(x, y)
        return _x_outer(g, m, -math.inf, -1.0 / C, lambda x: np.full_like(x, -np.inf),
                        lambda x: np.zeros_like(x), cfg)
    if tag is SdsTag.BAND_MINUS_PARABOLA:
        # (W u Z) \ E on both sides: between the parabola's co-polar and the band's co-polar
        lower = integrate_2d(_sds, -math.inf, 0.0, lambda y: -np.sqrt(2.0 * (1.0 - y)) / C,
                             lambda y: np.full_like(y, -1.0 / C), cfg)
        upper = integrate_2d(_sds, 0.0, eta, lambda y: -np.sqrt(2.0 * (1.0 - y)) / C,
                             lambda y: -np.sqrt((1.0 - y) * (1.0 + y)) / C, cfg)
        return (lower + upper).scaled(2.0)
    raise ValueError(f"unsupported co-polar region {tag}")


def _x_outer(g, m, xa, xb, ylo, yhi, cfg):
    """Outer integral over x in [xa, xb] (mirrored to [-xb, -xa] when m > 0), inner over y."""
    if m < 0:
        return integrate_2d(g, xa, xb, ylo, yhi, cfg)
    return integrate_2d(g, -xb, -xa, lambda x: ylo(-x), lambda x: yhi(-x), cfg)


def quad_sds_circle_length(radius: float, cfg: QuadratureConfig = QuadratureConfig()) -> OracleResult:
    return quad_len_sds(circle(radius), cfg)


# limits ------------------------------------------------------------------------------

@dataclass(frozen=True)
class TrendResult:
    schedule: tuple[float, ...]
    values: tuple[float, ...]
    increments: tuple[float, ...]
    decay_ratios: tuple[float, ...]
    monotone: bool

    @property
    def last(self) -> float:
        return self.values[-1]

    @property
    def final_increment(self) -> float:
        return abs(self.increments[-1]) if self.increments else 0.0

    def settles_at(self, target: float, increment_tol: float = 1e-6) -> bool:
        """Final increment below ``increment_tol`` and the target within one final increment of the last value."""
        return self.final_increment < increment_tol and abs(self.last - target) <= max(self.final_increment, 1e-15)


def limit_trend(f: Callable[[float], float], schedule: Sequence[float] | None = None) -> TrendResult:
    sched = tuple(QuadratureConfig().cutoff_schedule if schedule is None else schedule)
    values = tuple(float(f(e)) for e in sched)
    inc = tuple(b - a for a, b in zip(values, values[1:]))
    ratios = tuple(abs(b) / abs(a) if a != 0.0 else 0.0 for a, b in zip(inc, inc[1:]))
    monotone = all(d >= 0 for d in inc) or all(d <= 0 for d in inc)
    return TrendResult(sched, values, inc, ratios, monotone)


# exploratory Monte Carlo -------------------------------------------------------------

def monte_carlo_area(inside: Callable[[np.ndarray, np.ndarray], np.ndarray], density: Callable,
                     box: tuple[float, float, float, float], n: int = 200_000, seed: int = 0) -> tuple[float, float]:
    """Plain Monte Carlo estimate (value, standard error) over a bounding box; not used for acceptance."""
    rng = np.random.default_rng(seed)
    x0, x1, y0, y1 = box
    x = rng.uniform(x0, x1, n)
    y = rng.uniform(y0, y1, n)
    mask = inside(x, y)
    vals = np.zeros(n)
    vals[mask] = density(x[mask], y[mask])
    area = (x1 - x0) * (y1 - y0)
    return float(area * vals.mean()), float(area * vals.std(ddof=1) / math.sqrt(n))
