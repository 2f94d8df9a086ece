from __future__ import annotations

from pathlib import Path

import pytest

import akzeta.config as cfgmod
from akzeta.config import (
    REPORT_DIR_ENV,
    RunConfig,
    load_config,
    parse_config_text,
    report_dir,
    save_config,
)
from akzeta.errors import ConfigError


@pytest.fixture
def conf_path(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    conf_dir = tmp_path / ".config" / "akzeta"
    path = conf_dir / "akzeta.conf"
    monkeypatch.setattr(cfgmod, "CONFIG_DIR", conf_dir)
    monkeypatch.setattr(cfgmod, "CONFIG_PATH", path)
    return path


def test_save_and_load_config_round_trip(conf_path: Path) -> None:
    cfg = RunConfig(tolerance=2.5e-7, jobs=4, suite="lemmas", report_format="csv", log_level="info")
    save_config(cfg)

    assert conf_path.exists()
    text = conf_path.read_text()
    assert "jobs = 4" in text
    assert "report_path = none" in text

    loaded = load_config()
    assert loaded == cfg
    assert loaded.log_level == "INFO"


def test_load_config_creates_default_when_missing(conf_path: Path) -> None:
    loaded = load_config()
    assert loaded == RunConfig()
    assert conf_path.exists()


def test_load_config_explicit_missing_path_raises(tmp_path: Path) -> None:
    with pytest.raises(ConfigError, match="does not exist"):
        load_config(tmp_path / "nope.conf")


def test_load_config_explicit_path_with_comments(tmp_path: Path) -> None:
    path = tmp_path / "run.conf"
    path.write_text("# a comment\n\nsuite = duality  # inline\nmzv_cutoff = 500\n")
    cfg = load_config(path)
    assert cfg.suite == "duality"
    assert cfg.mzv_cutoff == 500
    assert cfg.tolerance == RunConfig().tolerance


def test_parse_config_text_rejects_line_without_equals() -> None:
    with pytest.raises(ConfigError, match="line 2"):
        parse_config_text("jobs = 2\njust words\n")


def test_from_dict_rejects_unknown_keys_and_bad_values() -> None:
    with pytest.raises(ConfigError, match="unknown config key"):
        RunConfig.from_dict({"auth_token": "x"})
    with pytest.raises(ConfigError, match="bad value for jobs"):
        RunConfig.from_dict({"jobs": "many"})


@pytest.mark.parametrize(
    "kwargs",
    [
        {"jobs": 0},
        {"tolerance": 0.0},
        {"quad_tol": -1e-9},
        {"suite": "everything"},
        {"report_format": "xml"},
        {"log_level": "LOUD"},
    ],
)
def test_run_config_validation(kwargs: dict) -> None:
    with pytest.raises(ConfigError):
        RunConfig(**kwargs)


def test_merged_applies_only_non_none_overrides() -> None:
    base = RunConfig(jobs=3, tolerance=1e-5, report_path="/tmp/r.json")
    merged = base.merged(jobs=None, tolerance=1e-4, suite="theorems")
    assert merged.jobs == 3
    assert merged.tolerance == 1e-4
    assert merged.suite == "theorems"
    assert merged.report_path == "/tmp/r.json"
    assert base.tolerance == 1e-5


def test_report_path_none_spellings() -> None:
    for raw in ("none", "None", ""):
        assert RunConfig.from_dict({"report_path": raw}).report_path is None


def test_report_dir_env_override(conf_path: Path, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(REPORT_DIR_ENV, raising=False)
    assert report_dir() == conf_path.parent / "reports"
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path / "out"))
    assert report_dir() == tmp_path / "out"
