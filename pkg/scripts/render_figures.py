"""Render every layer of the three charts for a few values of C."""

import argparse
from pathlib import Path

from hparabola import figures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--outdir", default="results/figures")
    p.add_argument("--C", type=float, nargs="+", default=[0.3, 0.6, 0.9])
    args = p.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for chart in figures.Chart:
        layers = sorted(figures.LAYERS[chart])
        for C in args.C:
            spec = figures.FigureSpec(chart, layers, C, figures.DEFAULT_VIEWPORTS[chart])
            path = outdir / f"{chart.value}_C{C:g}.svg"
            path.write_bytes(figures.render_svg(spec).encode("utf-8"))
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
