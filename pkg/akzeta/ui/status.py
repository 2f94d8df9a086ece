from __future__ import annotations

from ..harness.cases import CaseRecord
from ..utils.formatting import format_runtime


def summarize(records: list[CaseRecord], failed_only: bool = False) -> str:
    """One-line pass/fail summary, pieces joined with ``" • "``."""
    passed = sum(1 for r in records if r.passed)
    failed = len(records) - passed
    total_ms = sum(r.runtime_ms for r in records)
    parts = [f"Cases: {len(records)}", f"Passed: {passed}", f"Failed: {failed}", f"Runtime: {format_runtime(total_ms)}"]
    if failed_only:
        parts.append("Showing failures only")
    return " • ".join(parts)


class StatusManager:
    """Manages the status line of the report browser."""

    def __init__(self, app) -> None:
        """Initialize with reference to the main app."""
        self.app = app

    def update_status_label(self) -> None:
        """Refresh the status label from the app's full record list and filter state."""
        text = summarize(self.app.records, failed_only=self.app.failed_only)
        if self.app.source is not None:
            text += f" • {self.app.source.name}"
        self.app._status.update(text)
        self.app._status.display = True
