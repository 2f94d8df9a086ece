from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from types import SimpleNamespace

import pytest

import akzeta.cli as cli
import akzeta.config as cfgmod
from akzeta.config import REPORT_DIR_ENV, RunConfig, load_config
from akzeta.harness import SUITES, CaseRecord, emit_report
from akzeta.harness.suites import duality_cases
from akzeta.polybernoulli import kt_frakB_r2


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    conf_dir = tmp_path / ".config" / "akzeta"
    monkeypatch.setattr(cfgmod, "CONFIG_DIR", conf_dir)
    monkeypatch.setattr(cfgmod, "CONFIG_PATH", conf_dir / "akzeta.conf")
    monkeypatch.delenv(REPORT_DIR_ENV, raising=False)
    return conf_dir


def make_record(case_id: str, passed: bool = True) -> CaseRecord:
    return CaseRecord(case_id, "x = y", "left", "right", Fraction(1), Fraction(1 if passed else 2), 1e-6, passed, 1)


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == "akzeta 0.1.0"


def test_usage_errors_exit_2(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main([]) == 2
    assert cli.main(["coeffs", "--family", "D"]) == 2
    assert cli.main(["verify", "--suite", "everything"]) == 2


def test_coeffs_prints_table(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["coeffs", "--family", "D", "--n", "1"]) == 0
    assert capsys.readouterr().out.splitlines() == ["D^(1)", "0: 0", "1: -1/2", "2: 1/2"]


def test_coeffs_missing_k_is_a_range_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["coeffs", "--family", "Aprime", "--n", "4"]) == 2
    assert "need k" in capsys.readouterr().err


def test_polybernoulli_numbers(capsys: pytest.CaptureFixture[str]) -> None:
    # C_m^(1,-2) = (m+3)(2^m-1)
    assert cli.main(["polybernoulli", "--kind", "C", "--index", "1,-2", "--m", "2"]) == 0
    assert capsys.readouterr().out.strip() == "15"
    assert cli.main(["polybernoulli", "--kind", "frakB2", "--index", "1,2", "--m", "3"]) == 0
    assert capsys.readouterr().out.strip() == str(kt_frakB_r2(1, 2, 3))


def test_polybernoulli_frak_b_needs_depth_two(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["polybernoulli", "--kind", "frakB2", "--index", "1", "--m", "1"]) == 2
    assert "depth-2" in capsys.readouterr().err


def test_special_by_quadrature_and_theorem(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["special", "--fn", "eta", "--index", "2,-1", "--s", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("η(2,-1;1) = -1.3224670")

    assert cli.main(["special", "--fn", "eta", "--index", "1,1,-1", "--s", "1", "--method", "theorem"]) == 0
    assert capsys.readouterr().out.strip() == "η(1,1,-1;1) = 7/8"


def test_special_closed_form(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["special", "--fn", "xitilde", "--index", "1,-2", "--s", "1", "--method", "closedform"]) == 0
    assert capsys.readouterr().out.startswith("ξ̃(1,-2;1) = -1")

    assert cli.main(["special", "--fn", "eta", "--index", "2,-1", "--s", "1", "--method", "closedform"]) == 2
    assert "no closed form" in capsys.readouterr().err


def test_special_unregistered_closed_form_name_exits_2(monkeypatch: pytest.MonkeyPatch, capsys) -> None:
    monkeypatch.setattr(cli, "closed_form_for", lambda fn, index: SimpleNamespace(name="retired"))
    assert cli.main(["special", "--fn", "eta", "--index", "1,0", "--s", "1", "--method", "closedform"]) == 2
    assert "no closed form named 'retired'" in capsys.readouterr().err


def test_special_rejects_inadmissible_index(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["special", "--fn", "xitilde", "--index", "3,-2", "--s", "1"]) == 2
    assert "k < n" in capsys.readouterr().err


def test_special_theorem_needs_integer_s() -> None:
    assert cli.main(["special", "--fn", "eta", "--index", "2,-1", "--s", "1.5", "--method", "theorem"]) == 2


def test_zetastar(capsys: pytest.CaptureFixture[str]) -> None:
    # ζ*(1,2) = 2ζ(3)
    assert cli.main(["zetastar", "--exps", "1,2"]) == 0
    assert capsys.readouterr().out.startswith("2.404113806")
    assert cli.main(["zetastar", "--exps", "1,2", "--shifts", "1,x"]) == 2


def test_verify_writes_report_and_sidecar(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys) -> None:
    monkeypatch.setitem(SUITES, "duality", lambda cfg: duality_cases(cfg, depth1_max=3, depth2_max=1))
    report = tmp_path / "out" / "duality.json"

    assert cli.main(["verify", "--suite", "duality", "--report", str(report)]) == 0

    out = capsys.readouterr().out
    assert "Failed: 0" in out
    assert f"report: {report}" in out
    data = json.loads(report.read_text())
    assert len(data) == 6 + 8
    assert all(item["pass"] for item in data)
    sidecar = load_config(report.with_name(report.name + ".conf"))
    assert sidecar.suite == "duality"
    assert sidecar.report_path == str(report)


def test_verify_exit_code_follows_failures(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys) -> None:
    seen: list[RunConfig] = []

    def fake_run_suite(name: str, config: RunConfig) -> list[CaseRecord]:
        seen.append(config)
        return [make_record("a"), make_record("b", passed=False)]

    monkeypatch.setattr(cli, "run_suite", fake_run_suite)
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path / "reports"))

    assert cli.main(["verify", "--suite", "lemmas", "--format", "csv"]) == 1
    assert "FAIL b: x = y" in capsys.readouterr().out
    assert (tmp_path / "reports" / "akzeta-lemmas.csv").exists()
    assert seen[0].suite == "lemmas"


def test_verify_flags_override_config_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    seen: list[RunConfig] = []
    monkeypatch.setattr(cli, "run_suite", lambda name, config: seen.append(config) or [make_record("a")])
    conf = tmp_path / "run.conf"
    conf.write_text(f"suite = theorems\njobs = 3\ntolerance = 1e-5\nreport_path = {tmp_path / 'r.json'}\n")

    assert cli.main(["verify", "--config", str(conf), "--tolerance", "1e-4"]) == 0
    assert seen[0].suite == "theorems"
    assert seen[0].jobs == 3
    assert seen[0].tolerance == 1e-4
    assert (tmp_path / "r.json").exists()


def test_verify_missing_config_file_exits_2(tmp_path: Path) -> None:
    assert cli.main(["verify", "--config", str(tmp_path / "missing.conf")]) == 2


def test_browse_opens_report(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "r.json"
    records = [make_record("a"), make_record("b", passed=False)]
    emit_report(records, "json", path)
    opened = []
    monkeypatch.setattr(cli.ReportBrowserApp, "run", lambda self: opened.append(self))

    assert cli.main(["browse", str(path), "--failed-only"]) == 0
    assert opened[0].records == records
    assert opened[0].failed_only is True
    assert opened[0].source == path
