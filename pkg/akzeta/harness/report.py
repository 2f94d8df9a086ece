"""JSON and CSV reports of case records.

JSON reports are an array of objects with exactly the `CaseRecord` fields (the
``passed`` attribute under the key ``"pass"``). Rationals are written as
``"p/q"`` strings, numeric values as ``{"value": ..., "abs_error": ...}`` with
floats in shortest round-trip form. CSV cells use ``"p/q"`` and
``"value+/-abs_error"``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..config import RunConfig, save_config
from ..errors import ConfigError
from ..kernel.values import NumericValue
from .cases import CaseRecord, Value

logger = logging.getLogger(__name__)

FIELDS = ("case_id", "description", "lhs_route", "rhs_route", "lhs", "rhs", "tolerance", "pass", "runtime_ms")


def _value_to_json(v: Value | None) -> Any:
    if v is None:
        return None
    if isinstance(v, NumericValue):
        return {"value": v.value, "abs_error": v.abs_error}
    q = Fraction(v)
    return f"{q.numerator}/{q.denominator}"


def _value_from_json(raw: Any) -> Value | None:
    if raw is None:
        return None
    if isinstance(raw, dict):
        return NumericValue(raw["value"], raw["abs_error"])
    return Fraction(raw)


def _value_to_cell(v: Value | None) -> str:
    if v is None:
        return ""
    if isinstance(v, NumericValue):
        return f"{v.value!r}+/-{v.abs_error!r}"
    q = Fraction(v)
    return f"{q.numerator}/{q.denominator}"


def _value_from_cell(cell: str) -> Value | None:
    if not cell:
        return None
    if "+/-" in cell:
        value, error = cell.split("+/-", 1)
        return NumericValue(float(value), float(error))
    return Fraction(cell)


def record_to_dict(record: CaseRecord) -> dict[str, Any]:
    return {
        "case_id": record.case_id,
        "description": record.description,
        "lhs_route": record.lhs_route,
        "rhs_route": record.rhs_route,
        "lhs": _value_to_json(record.lhs),
        "rhs": _value_to_json(record.rhs),
        "tolerance": record.tolerance,
        "pass": record.passed,
        "runtime_ms": record.runtime_ms,
    }


def record_from_dict(data: dict[str, Any]) -> CaseRecord:
    return CaseRecord(
        case_id=str(data["case_id"]),
        description=str(data["description"]),
        lhs_route=str(data["lhs_route"]),
        rhs_route=str(data["rhs_route"]),
        lhs=_value_from_json(data["lhs"]),
        rhs=_value_from_json(data["rhs"]),
        tolerance=float(data["tolerance"]),
        passed=bool(data["pass"]),
        runtime_ms=int(data["runtime_ms"]),
    )


def render_json(records: Sequence[CaseRecord]) -> str:
    if not records:
        return "[]\n"
    return json.dumps([record_to_dict(r) for r in records], indent=2, ensure_ascii=False) + "\n"


def render_csv(records: Sequence[CaseRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        writer.writerow(
            [
                r.case_id,
                r.description,
                r.lhs_route,
                r.rhs_route,
                _value_to_cell(r.lhs),
                _value_to_cell(r.rhs),
                repr(r.tolerance),
                "true" if r.passed else "false",
                r.runtime_ms,
            ]
        )
    return buf.getvalue()


def emit_report(records: Sequence[CaseRecord], fmt: str, path: Path, config: RunConfig | None = None) -> None:
    """Write ``records`` to ``path`` as JSON or CSV.

    With a ``config``, the effective configuration is written next to the report
    as ``<path>.conf``; feeding it back through ``--config`` reproduces the run.

    Args:
        records: Records in report order.
        fmt: ``"json"`` or ``"csv"``.
        path: Destination file; missing parent directories are created.
        config: Effective run configuration, or None to skip the sidecar.

    Raises:
        ConfigError: If ``fmt`` is unknown.
        OSError: If the path is not writable.
    """
    if fmt == "json":
        text = render_json(records)
    elif fmt == "csv":
        text = render_csv(records)
    else:
        raise ConfigError(f"report format must be json or csv, got {fmt!r}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        if config is not None:
            save_config(config, path.with_name(path.name + ".conf"))
    except OSError as e:
        logger.error(f"cannot write report {path}: {e}")
        raise
    logger.info(f"wrote {len(records)} records to {path}")


def parse_report(path: Path) -> list[CaseRecord]:
    """Read a report written by `emit_report`; the format follows the suffix.

    Raises:
        ConfigError: If the file is not a report.
        OSError: If the file cannot be read.
    """
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix.lower() == ".csv":
            rows = list(csv.DictReader(io.StringIO(text)))
            return [
                CaseRecord(
                    case_id=row["case_id"],
                    description=row["description"],
                    lhs_route=row["lhs_route"],
                    rhs_route=row["rhs_route"],
                    lhs=_value_from_cell(row["lhs"]),
                    rhs=_value_from_cell(row["rhs"]),
                    tolerance=float(row["tolerance"]),
                    passed=row["pass"] == "true",
                    runtime_ms=int(row["runtime_ms"]),
                )
                for row in rows
            ]
        data = json.loads(text)
        if not isinstance(data, list):
            raise ConfigError(f"{path} is not a report: expected a JSON array")
        return [record_from_dict(item) for item in data]
    except (KeyError, ValueError, TypeError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"{path} is not a valid report: {e}") from e
