"""Write closed-form sweeps over C as CSV files."""

import argparse
from pathlib import Path

from hparabola import tables

SWEEPS = {
    "circumference.csv": ("G", "Gprime", "Ghat"),
    "matching_shifts.csv": ("alpha", "alpha_deviation", "beta", "beta_hat_D", "beta_hat_V", "focal"),
    "areas.csv": ("area_diff_B_minus_E", "area_diff_D_minus_E", "bph_area_diff_D_minus_V",
                  "bph_area_diff_E_minus_V", "area_asymptotic_triangle", "focal_band_ratio"),
}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--outdir", default="results/tables")
    p.add_argument("--grid", type=int, default=19)
    args = p.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    grid = tables.default_grid(args.grid)
    for name, quantities in SWEEPS.items():
        path = outdir / name
        path.write_bytes(tables.render_csv(tables.SweepSpec(grid, quantities)).encode("utf-8"))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
