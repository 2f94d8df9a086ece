from .cases import Case, CaseRecord, values_agree
from .report import emit_report, parse_report
from .runner import run_cases, run_suite
from .suites import SUITES, build_suite

__all__ = [
    "SUITES",
    "Case",
    "CaseRecord",
    "build_suite",
    "emit_report",
    "parse_report",
    "run_cases",
    "run_suite",
    "values_agree",
]
