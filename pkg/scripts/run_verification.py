"""Run the full verification suite and save the report.

    python scripts/run_verification.py [--out results/verify.txt] [--grid 9]
"""

import argparse
import sys
from pathlib import Path

from hparabola import checks


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="results/verify.txt")
    p.add_argument("--grid", type=int, default=9)
    args = p.parse_args()

    results = checks.run_checks(checks.VerifyConfig(grid=args.grid))
    report = checks.format_report(results)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(report)
    sys.stdout.write(report)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
