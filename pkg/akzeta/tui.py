from __future__ import annotations

import contextlib
from pathlib import Path
from typing import ClassVar

from textual.app import App, ComposeResult
from textual.binding import Binding
from textual.containers import Vertical
from textual.widgets import Footer, Header, Label

from .harness.cases import CaseRecord
from .ui import CaseTable, StatusManager
from .utils.formatting import format_runtime, format_value


def describe_record(record: CaseRecord) -> str:
    """Multi-line detail text for one case."""
    verdict = "PASS" if record.passed else "FAIL"
    return "\n".join(
        [
            f"{record.case_id} [{verdict}]",
            record.description,
            f"LHS ({record.lhs_route}): {format_value(record.lhs, digits=17)}",
            f"RHS ({record.rhs_route}): {format_value(record.rhs, digits=17)}",
            f"tolerance {record.tolerance:.1e} • runtime {format_runtime(record.runtime_ms)}",
        ]
    )


class ReportBrowserApp(App):
    """Textual browser for a verification report."""

    CSS = """
    #table-title { padding: 1 0; }
    #detail { padding: 1 1; border: round $accent; }
    """

    BINDINGS: ClassVar[list[Binding]] = [
        Binding("q", "quit", "Quit"),
        Binding("f", "toggle_failed", "Failures only"),
        Binding("escape", "hide_detail", "Hide detail"),
    ]

    def __init__(self, records: list[CaseRecord], source: Path | None = None) -> None:
        super().__init__()
        self.records = list(records)
        self.source = source
        self.failed_only = False
        title = f"Cases ({source.name})" if source is not None else "Cases"
        self._table = CaseTable(title)
        self._status = Label("", id="status")
        self._detail = Label("", id="detail")
        self._status_manager = StatusManager(self)

    def compose(self) -> ComposeResult:
        yield Header(show_clock=False)
        with Vertical():
            yield self._status
            yield self._table
            yield self._detail
        yield Footer()

    def on_mount(self) -> None:
        self._detail.display = False
        self._render_records()

    def visible_records(self) -> list[CaseRecord]:
        if self.failed_only:
            return [r for r in self.records if not r.passed]
        return list(self.records)

    def _render_records(self) -> None:
        self._table.set_records(self.visible_records())
        self._status_manager.update_status_label()

    def action_toggle_failed(self) -> None:
        """Switch between all cases and failing cases only."""
        self.failed_only = not self.failed_only
        self.action_hide_detail()
        self._render_records()

    def action_hide_detail(self) -> None:
        with contextlib.suppress(Exception):
            self._detail.display = False

    def on_case_table_detail_requested(self, message: CaseTable.DetailRequested) -> None:
        """Show the selected case's values and routes below the table."""
        self._detail.update(describe_record(message.record))
        self._detail.display = True
