import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from hparabola import checks
from hparabola.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_OK, main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def full_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("verify") / "report.txt"
    code = main(["verify", "--out", str(out)])
    return code, out.read_text()


def test_full_report_lists_each_criterion_once(full_report):
    _, text = full_report
    ids = re.findall(r"^CHECK (\S+) (?:PASS|FAIL)", text, re.M)
    for k in range(1, 11):
        assert ids.count(f"AC{k}") == 1
    assert len(ids) == len(set(ids)) == len(checks.registered())
    assert re.search(r"^SUMMARY \d+ passed, \d+ failed$", text, re.M)


def test_full_report_exit_code_matches_results(full_report):
    code, text = full_report
    expected = EXIT_OK if " FAIL " not in text else EXIT_FAIL
    assert code == expected


def test_filter_runs_only_that_module(capsys):
    main(["verify", "--filter", "models"])
    out = capsys.readouterr().out
    ids = re.findall(r"^CHECK (\S+)", out, re.M)
    assert ids and all(i == "AC8" or i.startswith("models.") for i in ids)


def test_self_test_fails(capsys):
    assert main(["verify", "--filter", "sds", "--self-test"]) == EXIT_FAIL
    assert "CHECK AC5 FAIL" in capsys.readouterr().out


def test_unknown_module(capsys):
    assert main(["verify", "--filter", "nope"]) == EXIT_CONFIG
    assert "unknown modules" in capsys.readouterr().err


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rel_tol": 1e-9, "grid": 3, "seed": 7}))
    assert main(["verify", "--config", str(cfg), "--filter", "family"]) == EXIT_OK
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    assert main(["verify", "--config", str(bad)]) == EXIT_CONFIG
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG
    capsys.readouterr()


def test_table_golden(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["table", "G", "Gprime", "Ghat", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == (GOLDEN / "sweep_G_Gprime_Ghat.csv").read_bytes()


def test_figure_golden(tmp_path):
    out = tmp_path / "fig.svg"
    assert main(["figure", "--chart", "bck", "--layers", "E", "B", "--C", "0.6", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == (GOLDEN / "bck_E_B_C0.6.svg").read_bytes()


def test_table_to_stdout(capsys):
    assert main(["table", "alpha_root"]) == EXIT_OK
    assert capsys.readouterr().out == "C,alpha_root\n,0.801986429939\n"


@pytest.mark.parametrize("argv", [
    ["table"], ["table", "nope"], ["table", "G", "--C", "1.5"], ["table", "G", "--grid", "0"],
    ["figure", "--chart", "nope"], ["figure", "--layers", "copolar_E"], ["figure", "--viewport", "1", "0", "0", "1"],
    ["root", "--bracket", "0.1", "0.5"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_CONFIG
    assert capsys.readouterr().err.startswith("hparabola: error:")


def test_root(capsys):
    assert main(["root"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("C* = 0.801986429939 +- ")
    assert "bisection steps on [0.5, 0.95]" in out


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hparabola", "root", "--tol", "1e-6"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("C* = 0.80198")


def test_argparse_rejects_missing_command():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
