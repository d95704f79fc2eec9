"""The ten acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line, printed together at the end of the
pytest run; ``python tests/test_acceptance.py`` prints them directly.
Values are recomputed here from the library, not taken from the verify checks.
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

from hparabola import closed_forms as cf, conics, family, models, quadrature as quad, sds
from hparabola.cli import main as cli_main
from hparabola.family import Cutoff, Family, RegionSpec
from hparabola.sds import SdsRegion

sys.path.insert(0, str(Path(__file__).parent))
from conftest import record_acceptance  # noqa: E402

pytestmark = pytest.mark.acceptance

GRID = [k / 10 for k in range(1, 10)]
ETAS = GRID
LN2 = math.log(2.0)


class Tally:
    """Worst violation over a set of comparisons; ratio > 1 means failure."""

    def __init__(self):
        self.worst, self.where, self.count = 0.0, "", 0

    def abs(self, expected, got, tol, where=""):
        self._add(abs(got - expected) / tol, where)

    def rel(self, expected, got, tol, where=""):
        self._add(abs(got - expected) / (tol * max(abs(expected), 1e-300)), where)

    def flag(self, ok, where=""):
        self._add(0.0 if ok else math.inf, where)

    def _add(self, ratio, where):
        self.count += 1
        if not ratio <= self.worst:
            self.worst, self.where = ratio, where

    @property
    def ok(self):
        return self.worst <= 1.0


def conclude(ac, tally, note=""):
    status = "PASS" if tally.ok else "FAIL"
    detail = f"{tally.count} comparisons, worst err/tol {tally.worst:.3g}"
    if tally.where:
        detail += f" at {tally.where}"
    if note:
        detail += f"; {note}"
    record_acceptance(f"{ac} {status} {detail}")
    assert tally.ok, detail


def test_ac1_focus_pipeline():
    t = Tally()
    for C in GRID:
        fx = conics.foci_of_h_elliptic_parabola(C)
        ax, ay = fx.asymptotic.to_affine()
        t.abs(0.0, ax, 1e-10, f"C={C}")
        t.abs(1.0, ay, 1e-10, f"C={C}")
        t.abs(0.0, fx.proper.x, 1e-10, f"C={C}")
        t.abs(C * C / (2.0 - C * C), fx.proper.y, 1e-10, f"C={C}")
        lams = sorted(m.lam / m.mu for m in fx.members if m.degenerate)
        t.flag(len(lams) == 2, f"C={C} singular members")
        if len(lams) == 2:
            t.abs(C * C, lams[0], 1e-12, f"C={C}")
            t.abs(1.0, lams[1], 1e-12, f"C={C}")
    conclude("AC1", t)


def test_ac2_killing_identity():
    t = Tally()
    for C in GRID:
        focus = models.BckPoint(0.0, family.focus_height(C))
        for s in np.linspace(-10.0, 10.0, 41):
            s = float(s)
            t.abs(0.0, family.killing_residual(C, s), 1e-12, f"C={C} t={s}")
            arcosh_form, _ = family.killing_common_value(C, s)
            t.abs(arcosh_form, models.bck_distance(family.parabola_point(C, s), focus), 1e-12, f"C={C} t={s}")
    conclude("AC2", t)


def test_ac3_closed_forms_match_quadrature():
    t = Tally()
    for C in GRID:
        t.rel(cf.area_asymptotic_triangle(C), quad.quad_area_hyp(RegionSpec(Family.A, C)).value, 1e-8, f"A C={C}")
        t.rel(sds.sds_area_Z(C), quad.quad_area_sds(SdsRegion("Z", C)).value, 1e-8, f"Z C={C}")
        R = math.atanh(C)
        t.rel(cf.disk_area(R), quad.quad_disk_area(R).value, 1e-8, f"disk area R={R:.4f}")
        t.rel(cf.disk_circumference(R), quad.quad_disk_circumference(R).value, 1e-8, f"disk length R={R:.4f}")
        for eta in ETAS:
            cut = Cutoff("lineal", eta)
            w = f"C={C} eta={eta}"
            t.rel(cf.area_band_segment(C, eta), quad.quad_area_hyp(RegionSpec(Family.BAND_SEGMENT, C, cut)).value, 1e-8, w)
            t.rel(cf.area_parabola_segment(C, eta), quad.quad_area_hyp(RegionSpec(Family.E, C, cut)).value, 1e-8, w)
            t.rel(cf.len_band_segment_boundary(C, eta), quad.quad_len_band_boundary(C, eta).value, 1e-8, w)
            t.rel(cf.len_parabola_segment_boundary(C, eta), quad.quad_len_parabola_boundary(C, eta).value, 1e-8, w)
            t.rel(cf.len_M(C, eta), quad.quad_len_M(C, eta).value, 1e-8, w)
            t.rel(sds.sds_area_W(C, eta), quad.quad_area_sds(SdsRegion("W", C, eta)).value, 1e-8, w)
            t.rel(sds.sds_area_E_tilde(C, eta), quad.quad_area_sds(SdsRegion("E", C, eta)).value, 1e-8, w)
    for eta in ETAS:
        cut = Cutoff("lineal", eta)
        t.rel(cf.area_horodisk_segment(eta), quad.quad_area_hyp(RegionSpec(Family.E1, None, cut)).value, 1e-8, f"eta={eta}")
        t.rel(cf.len_horocycle_segment(eta), quad.quad_len_horocycle_boundary(eta).value, 1e-8, f"eta={eta}")
    conclude("AC3", t)


def _settles(trend, target, t, where):
    # final increment < 1e-6, and the target no farther from the last value than that increment
    small = trend.final_increment < 1e-6
    close = abs(trend.last - target) <= max(trend.final_increment, 1e-15)
    t.flag(small, f"{where} final increment {trend.final_increment:.2e}")
    t.flag(close, f"{where} |last - target| {abs(trend.last - target):.2e}")
    return small and close


def test_ac4_area_difference_identities():
    t = Tally()
    unsettled = []
    for C in GRID:
        def diff(eta):
            cut = Cutoff("lineal", eta)
            return (quad.quad_area_hyp(RegionSpec(Family.BAND_SEGMENT, C, cut)).value
                    - quad.quad_area_hyp(RegionSpec(Family.E, C, cut)).value)

        trend = quad.limit_trend(diff)
        if not _settles(trend, cf.area_diff_B_minus_E(C), t, f"C={C}"):
            unsettled.append(C)
        s = cf.cofactor(C)
        t.abs(2.0 * C / s * (1.0 - LN2), cf.area_diff_D_minus_E(C), 1e-12, f"D-E C={C}")
        t.abs(0.0, cf.equ1_residual(C), 1e-12, f"recombination C={C}")
        t.abs(1.0 - LN2, cf.translation_equiv_for(C), 1e-12, f"translation C={C}")
    conclude("AC4", t, f"eta-trend unsettled for C in {unsettled}" if unsettled else "")


def test_ac5_circumference_duality():
    t = Tally()
    unsettled = []
    for C in GRID:
        t.abs(cf.G(C), sds.circumference_diff_via_polar(C), 1e-12, f"polar C={C}")
        trend = quad.limit_trend(lambda eta: quad.quad_len_band_boundary(C, eta).value
                                 - quad.quad_len_parabola_boundary(C, eta).value)
        if not _settles(trend, cf.G(C), t, f"C={C}"):
            unsettled.append(C)
    conclude("AC5", t, f"eta-trend unsettled for C in {unsettled}" if unsettled else "")


def test_ac6_root_and_limits():
    t = Tally()
    near_one = 1.0 - 1e-6
    t.abs(0.801986, cf.alpha_root().root, 5e-6, "root")
    t.abs(1.0 - LN2, cf.alpha(1e-3), 1e-5, "alpha(1e-3)")
    t.abs(1.0 - LN2, cf.beta_hat_D(near_one), 1e-4, "beta_hat_D(1-1e-6)")
    t.abs(LN2, cf.beta_hat_V(near_one), 1e-4, "beta_hat_V(1-1e-6)")
    c2 = near_one * near_one
    t.abs(-LN2, cf.beta(near_one) - math.atanh(c2 / (2.0 - c2)), 1e-4, "beta - focal at 1-1e-6")
    conclude("AC6", t)


def test_ac7_ratio_trend():
    ratios = [quad.quad_band_ratio(C)[0] for C in (0.9, 0.99, 0.999)]
    gaps = [abs(r - 1.0) for r in ratios]
    t = Tally()
    t.flag(all(b < a for a, b in zip(gaps, gaps[1:])), "gaps to 1 not decreasing")
    conclude("AC7", t, "ratios " + ", ".join(f"{r:.6f}" for r in ratios))


def _membership_disagreements(rng, n, tol=1e-9):
    bases = [RegionSpec(Family.E, 0.5), RegionSpec(Family.B, 0.5), RegionSpec(Family.D, 0.5),
             RegionSpec(Family.V, 0.5), RegionSpec(Family.A, 0.5), RegionSpec(Family.E1),
             RegionSpec(Family.BAND_SEGMENT, 0.5, Cutoff("lineal", 0.7))]
    bad = 0
    for base in bases:
        r = np.sqrt(rng.uniform(0.0, 1.0 - 1e-9, n))
        a = rng.uniform(0.0, 2.0 * math.pi, n)
        Cs = rng.choice(GRID, n)
        for x, y, C in zip(r * np.cos(a), r * np.sin(a), Cs):
            reg = base if base.C is None else RegionSpec(base.family, float(C), base.cutoff)
            p = models.BckPoint(float(x), float(y))
            q = models.bck_to_bph(p)
            if family.contains(reg, p, -tol) and not family.contains_bph(reg, q, tol):
                bad += 1
            if family.contains_bph(reg, q, -tol) and not family.contains(reg, p, tol):
                bad += 1
    return bad


def test_ac8_model_consistency():
    rng = np.random.default_rng(8_2024)
    t = Tally()
    bad = _membership_disagreements(rng, 10_000)
    t.flag(bad == 0, f"{bad} membership disagreements")
    r1, r2 = np.sqrt(rng.uniform(0.0, 0.99, (2, 10_000)))
    a1, a2 = rng.uniform(0.0, 2.0 * math.pi, (2, 10_000))
    for x1, y1, x2, y2 in zip(r1 * np.cos(a1), r1 * np.sin(a1), r2 * np.cos(a2), r2 * np.sin(a2)):
        p, q = models.BckPoint(float(x1), float(y1)), models.BckPoint(float(x2), float(y2))
        t.abs(models.bck_distance(p, q), models.bph_distance(models.bck_to_bph(p), models.bck_to_bph(q)), 1e-10)
    for C in GRID:
        t.abs(cf.area_diff_D_minus_E(C), cf.bph_area_diff_D_minus_E_cut(C, 1e9), 1e-12, f"D-E C={C}")
        t.abs(2.0 * C / cf.cofactor(C), cf.bph_area_diff_D_minus_V(C), 1e-12, f"D-V C={C}")
    conclude("AC8", t, f"{bad} membership disagreements")


def test_ac9_disk_duality():
    t = Tally()
    for C in (0.2, 0.5, 0.8):
        R = math.atanh(C)
        area, length = cf.disk_area(R), cf.disk_circumference(R)
        sds_len = 2.0 * math.pi * math.cosh(R)  # the circle of poles at distance 1/C from the centre
        sds_area = 2.0 * math.pi * math.sinh(R)
        t.abs(area, -2.0 * math.pi + sds_len, 1e-13 * max(1.0, area), f"area C={C}")
        t.abs(length, sds_area, 1e-13 * max(1.0, length), f"length C={C}")
        q_sds_len = quad.quad_sds_circle_length(1.0 / C).value
        q_sds_area = quad.quad_area_sds(SdsRegion("disk", C)).value
        t.rel(area, -2.0 * math.pi + q_sds_len, 1e-8, f"quad area C={C}")
        t.rel(length, q_sds_area, 1e-8, f"quad length C={C}")
        t.rel(area, quad.quad_disk_area(R).value, 1e-8, f"quad disk C={C}")
    conclude("AC9", t)


def test_ac10_cli(tmp_path, capsys):
    t = Tally()
    code = cli_main(["verify", "--out", str(tmp_path / "report.txt")])
    t.flag(code == 0, f"verify exit {code}")
    code = cli_main(["verify", "--self-test", "--out", str(tmp_path / "self.txt")])
    t.flag(code == 1, f"self-test exit {code}")
    outs = []
    for k in range(2):
        csv, svg = tmp_path / f"t{k}.csv", tmp_path / f"f{k}.svg"
        cli_main(["table", "G", "Gprime", "Ghat", "--grid", "9", "--out", str(csv)])
        cli_main(["figure", "--chart", "bck", "--layers", "E", "B", "--C", "0.6", "--out", str(svg)])
        outs.append((csv.read_bytes(), svg.read_bytes()))
    golden = Path(__file__).parent / "golden"
    t.flag(outs[0] == outs[1], "outputs differ between runs")
    t.flag(outs[0][0] == (golden / "sweep_G_Gprime_Ghat.csv").read_bytes(), "csv differs from golden")
    t.flag(outs[0][1] == (golden / "bck_E_B_C0.6.svg").read_bytes(), "svg differs from golden")
    report = (tmp_path / "report.txt").read_text()
    failed = [l.split()[1] for l in report.splitlines() if l.startswith("CHECK ") and " FAIL " in l]
    capsys.readouterr()
    conclude("AC10", t, f"verify failures: {' '.join(failed)}" if failed else "")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
