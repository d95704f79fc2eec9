"""Cut-off trends eta -> 1 of the band-minus-parabola area and boundary length.

Prints each trend against its closed-form limit, with successive increments,
so the linear approach in 1 - eta is visible.
"""

import argparse

from hparabola import closed_forms as cf
from hparabola import quadrature as quad
from hparabola.family import Cutoff, Family, RegionSpec


def area_diff(C, eta):
    cut = Cutoff("lineal", eta)
    return (quad.quad_area_hyp(RegionSpec(Family.BAND_SEGMENT, C, cut)).value
            - quad.quad_area_hyp(RegionSpec(Family.E, C, cut)).value)


def length_diff(C, eta):
    return quad.quad_len_band_boundary(C, eta).value - quad.quad_len_parabola_boundary(C, eta).value


def show(name, f, target, schedule):
    trend = quad.limit_trend(f, schedule)
    print(f"{name}: limit {target:.12f}")
    prev = None
    for eta, v in zip(trend.schedule, trend.values):
        inc = "" if prev is None else f"{v - prev:+.3e}"
        print(f"  eta = 1 - {1.0 - eta:.0e}  {v:.12f}  gap {target - v:+.3e}  {inc}")
        prev = v
    print(f"  settles (increment < 1e-6): {trend.settles_at(target)}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--C", type=float, nargs="+", default=[0.2, 0.6, 0.9])
    p.add_argument("--kmax", type=int, default=6, help="schedule 1 - 10^-k for k = 1..kmax")
    args = p.parse_args()

    schedule = [1.0 - 10.0 ** -k for k in range(1, args.kmax + 1)]
    for C in args.C:
        show(f"area, C = {C}", lambda e: area_diff(C, e), cf.area_diff_B_minus_E(C), schedule)
        show(f"length, C = {C}", lambda e: length_diff(C, e), cf.G(C), schedule)


if __name__ == "__main__":
    main()
