"""Command-line entry point: ``hparabola verify | table | figure | root``.

Exit codes: 0 success, 1 failed verification, 2 usage or configuration error.
No environment variables are read; everything comes from the arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, figures, tables
from . import closed_forms as cf
from .models import DomainError
from .quadrature import QuadratureConfig

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot write {out}: {exc}") from exc


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("the config file must hold a JSON object")
    known = {"rel_tol", "abs_tol", "max_depth", "max_intervals", "grid", "samples", "seed"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")
    return data


def verify_config(args) -> checks.VerifyConfig:
    data = _load_config(args.config)
    qkw = {k: data[k] for k in ("rel_tol", "abs_tol", "max_depth", "max_intervals") if k in data}
    if args.tol is not None:
        qkw["rel_tol"] = args.tol
    perturb = ((checks.SELF_TEST_FORMULA, checks.SELF_TEST_DELTA),) if args.self_test else ()
    try:
        return checks.VerifyConfig(
            grid=args.grid if args.grid is not None else data.get("grid", 9),
            quad=QuadratureConfig(**qkw),
            samples=data.get("samples", checks.VerifyConfig.samples),
            seed=data.get("seed", checks.DEFAULT_SEED),
            perturb=perturb,
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def cmd_verify(args) -> int:
    cfg = verify_config(args)
    modules = args.filter or None
    if modules is not None:
        unknown = set(modules) - set(checks.MODULES)
        if unknown:
            raise ConfigError(f"unknown modules {sorted(unknown)}; choose from {', '.join(checks.MODULES)}")
    results = checks.run_checks(cfg, modules)
    _write(checks.format_report(results), args.out)
    if args.out is not None:
        failed = [r.id for r in results if not r.passed]
        print(f"{len(results) - len(failed)} passed, {len(failed)} failed" + (f": {' '.join(failed)}" if failed else ""))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_table(args) -> int:
    try:
        C_values = tuple(args.C) if args.C else tables.default_grid(args.grid)
        spec = tables.SweepSpec(C_values, tuple(args.quantities), args.out)
        text = tables.render_csv(spec)
    except (tables.SweepError, DomainError) as exc:
        raise ConfigError(str(exc)) from exc
    _write(text, args.out)
    return EXIT_OK


def cmd_figure(args) -> int:
    try:
        chart = figures.Chart(args.chart)
    except ValueError as exc:
        raise ConfigError(f"unknown chart {args.chart!r}") from exc
    layers = args.layers or sorted(figures.LAYERS[chart])
    viewport = tuple(args.viewport) if args.viewport else figures.DEFAULT_VIEWPORTS[chart]
    try:
        spec = figures.FigureSpec(chart, tuple(figures.Layer(n) for n in layers), args.C, viewport, args.samples)
    except figures.FigureError as exc:
        raise ConfigError(str(exc)) from exc
    _write(figures.render_svg(spec), args.out)
    return EXIT_OK


def cmd_root(args) -> int:
    lo, hi = args.bracket
    try:
        res = cf.alpha_root(lo, hi, tol=args.tol)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    print(f"C* = {res.root:.12f} +- {res.error_bound:.1e} ({res.iterations} bisection steps on [{lo}, {hi}])")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hparabola", description="Closed forms and oracle checks for the h-elliptic parabola.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--config", help="JSON file with tolerances, grid, samples or seed")
    v.add_argument("--filter", nargs="+", metavar="MODULE", help=f"only checks of these modules ({', '.join(checks.MODULES)})")
    v.add_argument("--grid", type=int, help="number of C (and eta) grid points, default 9")
    v.add_argument("--tol", type=float, help="relative tolerance of the quadrature oracle")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--self-test", action="store_true", help=f"perturb {checks.SELF_TEST_FORMULA} by {checks.SELF_TEST_DELTA:g}; must fail")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="CSV sweep of closed-form quantities")
    t.add_argument("quantities", nargs="*", help="quantity ids, e.g. G Gprime Ghat alpha_root")
    t.add_argument("--C", type=float, nargs="+", help="explicit C values")
    t.add_argument("--grid", type=int, default=9, help="grid size when --C is not given")
    t.add_argument("--out", help="output CSV path")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("figure", help="SVG of region boundaries")
    f.add_argument("--chart", default="bck", help="bck, bph or dual")
    f.add_argument("--layers", nargs="+", help="layer names (default: all of the chart)")
    f.add_argument("--C", type=float, default=0.6)
    f.add_argument("--viewport", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    f.add_argument("--samples", type=int, default=figures.DEFAULT_SAMPLES, help="samples per curve")
    f.add_argument("--out", help="output SVG path")
    f.set_defaults(func=cmd_figure)

    r = sub.add_parser("root", help="the C where the matching band shift equals the focal distance")
    r.add_argument("--tol", type=float, default=1e-10, help="bisection half-width at stop")
    r.add_argument("--bracket", type=float, nargs=2, default=(0.5, 0.95), metavar=("LO", "HI"))
    r.set_defaults(func=cmd_root)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"hparabola: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
