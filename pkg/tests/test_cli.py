import json
import re

import pytest

from superfock.cli import main
from superfock.verify import (RunConfig, report_json, report_text,
                              run_check, run_suite)


def strip_times(blob: str) -> str:
    return re.sub(r'"seconds": [0-9.]+', '"seconds": 0', blob)


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(m=1, n=0)
    with pytest.raises(ValueError):
        RunConfig(m=4, n=-1)
    with pytest.raises(ValueError):
        RunConfig(m=4, n=0, suites=("nope",))
    assert RunConfig(m=6, n=1).M == 4


def test_run_check_captures_exceptions():
    res = run_check("s", "boom", "x", lambda: 1 / 0)
    assert res.status == "fail"
    assert "ZeroDivisionError" in res.detail
    assert run_check("s", "ok", "x", lambda: True).status == "pass"
    assert run_check("s", "no", "x", lambda: (False, "w")).detail == "w"


def test_small_run_and_reports():
    cfg = RunConfig(m=4, n=0, max_degree=2, suites=("quotient", "specfun"))
    results = run_suite(cfg)
    assert results and all(r.status == "pass" for r in results)
    blob = report_json(cfg, results)
    payload = json.loads(blob)
    assert payload["failures"] == 0
    assert {c["suite"] for c in payload["checks"]} == {"quotient", "specfun"}
    text = report_text(cfg, results)
    assert "0 failures" in text


def test_determinism_modulo_timing():
    cfg = RunConfig(m=4, n=1, max_degree=2, suites=("quotient", "algebra"), seed=5)
    a = report_json(cfg, run_suite(cfg))
    b = report_json(cfg, run_suite(cfg))
    assert strip_times(a) == strip_times(b)


def test_skip_gating_below_m4():
    cfg = RunConfig(m=4, n=1, max_degree=2, suites=("integral",))
    results = run_suite(cfg)
    assert results
    assert all(r.status == "skip" for r in results)
    assert all("M >= 4" in r.detail for r in results)


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["--m", "4", "--n", "0", "--max-degree", "2",
                 "--suite", "quotient", "--format", "json", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["failures"] == 0
    assert main(["--m", "1", "--n", "0"]) == 2


def test_cli_gamma_and_trace(capsys):
    assert main(["--m", "4", "--n", "0", "--gamma"]) == 0
    assert "pi" in capsys.readouterr().out
    assert main(["--m", "4", "--n", "1", "--gamma"]) == 2  # M < 4
    capsys.readouterr()
    assert main(["--m", "4", "--n", "0", "--trace", "1,0,0,0", "--rate", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == "1/2"
    assert payload["terms"][0]["rho_power"] == 2


def test_cli_structure_constants(capsys):
    assert main(["--m", "2", "--n", "1", "--structure-constants"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table["e0+ , e0-"] == {"L0": "2"}


def test_cli_specfun_table(capsys):
    assert main(["--m", "5", "--n", "0", "--specfun-table"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("t,")
    assert len(lines) == 5
