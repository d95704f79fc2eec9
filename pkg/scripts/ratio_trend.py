"""Band-over-parabola area ratio as C -> 1, by quadrature and in closed form.

The band is raised to the focus; the ratio compares what it adds outside the
parabola with what the parabola keeps below the focus.
"""

import argparse

from hparabola import closed_forms as cf
from hparabola import quadrature as quad


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--C", type=float, nargs="+", default=[0.5, 0.9, 0.99, 0.999, 0.9999])
    args = p.parse_args()

    print(f"{'C':>8} {'quadrature':>14} {'closed form':>14} {'difference':>11}")
    for C in args.C:
        r = quad.quad_band_ratio(C)[0]
        c = cf.focal_band_ratio(C)
        print(f"{C:>8g} {r:>14.10f} {c:>14.10f} {r - c:>11.2e}")
    print(f"limit at C = 1: {cf.focal_band_ratio_limit_at_one():.10f}  (1 - ln 2 / ln(1 + sqrt 2))")


if __name__ == "__main__":
    main()
