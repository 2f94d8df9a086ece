from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any

from .errors import ConfigError

CONFIG_DIR = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config")) / "akzeta"
CONFIG_PATH = CONFIG_DIR / "akzeta.conf"
REPORT_DIR_ENV = "AKZETA_REPORT_DIR"

SUITE_NAMES = ("coefficients", "polybernoulli", "duality", "lemmas", "theorems", "paper-examples", "all")
REPORT_FORMATS = ("json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class RunConfig:
    tolerance: float = 1e-6  # added on top of the routes' own error bars
    quad_tol: float = 1e-9
    quad_max_level: int = 7
    mzv_tol: float = 1e-9
    mzv_cutoff: int = 10_000
    series_cutoff: int = 60
    suite: str = "all"
    jobs: int = 1
    report_path: str | None = None
    report_format: str = "json"
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.suite not in SUITE_NAMES:
            raise ConfigError(f"unknown suite {self.suite!r}; expected one of {', '.join(SUITE_NAMES)}")
        if self.report_format not in REPORT_FORMATS:
            raise ConfigError(f"report_format must be json or csv, got {self.report_format!r}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {self.log_level!r}")
        self.log_level = self.log_level.upper()
        for name in ("tolerance", "quad_tol", "mzv_tol"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        for name in ("jobs", "quad_max_level", "mzv_cutoff", "series_cutoff"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be at least 1")

    @staticmethod
    def from_dict(data: dict[str, Any]) -> RunConfig:
        """Create a `RunConfig` from a mapping of (possibly string) values.

        Args:
            data: Keys are field names; values may be strings as read from a
                config file or already-typed values. Missing keys keep defaults.

        Returns:
            A validated `RunConfig`.

        Raises:
            ConfigError: For unknown keys or values that do not parse.
        """
        known = {f.name: f for f in fields(RunConfig)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")
        kwargs: dict[str, Any] = {}
        for key, raw in data.items():
            default = known[key].default
            try:
                if raw is None or (key == "report_path" and str(raw).strip() in ("", "none", "None")):
                    kwargs[key] = None
                elif isinstance(default, float):
                    kwargs[key] = float(raw)
                elif isinstance(default, int):
                    kwargs[key] = int(raw)
                else:
                    kwargs[key] = str(raw).strip()
            except (TypeError, ValueError) as e:
                raise ConfigError(f"bad value for {key}: {raw!r}") from e
        return RunConfig(**kwargs)

    def to_dict(self) -> dict[str, Any]:
        """Plain mapping of every field, in declaration order."""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def merged(self, **overrides: Any) -> RunConfig:
        """Copy with the non-None overrides applied (command-line flags over file values)."""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig.from_dict(data)


def report_dir() -> Path:
    """Default directory for reports; ``$AKZETA_REPORT_DIR`` overrides it."""
    env = os.environ.get(REPORT_DIR_ENV)
    return Path(env) if env else CONFIG_DIR / "reports"


def parse_config_text(text: str) -> dict[str, str]:
    """Parse flat ``key = value`` lines; ``#`` starts a comment.

    Raises:
        ConfigError: For a non-empty line without ``=``.
    """
    data: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = body.split("=", 1)
        data[key.strip()] = value.strip()
    return data


def _format_value(value: Any) -> str:
    if value is None:
        return "none"
    # repr keeps floats round-trip exact
    return repr(value) if isinstance(value, float) else str(value)


def format_config_text(cfg: RunConfig) -> str:
    lines = ["# akzeta run configuration"]
    for key, value in cfg.to_dict().items():
        lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + "\n"


def ensure_config_dir() -> None:
    """Ensure the configuration directory exists.

    Raises:
        OSError: If the directory cannot be created.
    """
    CONFIG_DIR.mkdir(parents=True, exist_ok=True)


def load_config(path: Path | None = None) -> RunConfig:
    """Load a `RunConfig` from ``path`` or `CONFIG_PATH`.

    Without an explicit path a missing default file is created with default
    values first. An explicit path must exist.

    Raises:
        ConfigError: If an explicit file is missing or its contents are invalid.
        OSError: If reading the file fails.
    """
    if path is None:
        ensure_config_dir()
        if not CONFIG_PATH.exists():
            cfg = RunConfig()
            save_config(cfg)
            return cfg
        path = CONFIG_PATH
    elif not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    cfg = RunConfig.from_dict(parse_config_text(path.read_text(encoding="utf-8")))
    logging.getLogger(__name__).debug(f"loaded config from {path}")
    return cfg


def save_config(cfg: RunConfig, path: Path | None = None) -> None:
    """Write ``cfg`` as ``key = value`` text to ``path`` or `CONFIG_PATH`.

    Raises:
        OSError: If writing the file fails.
    """
    if path is None:
        ensure_config_dir()
        path = CONFIG_PATH
    path.write_text(format_config_text(cfg), encoding="utf-8")
