from __future__ import annotations

import contextlib
from collections.abc import Iterable

from textual.message import Message
from textual.widgets import DataTable, Label, Static

from ..harness.cases import CaseRecord
from ..utils.formatting import format_runtime, format_value

COLUMNS = ("Case", "Pass", "LHS route", "LHS", "RHS route", "RHS", "Time")


class CaseTable(Static):
    """Widget that renders case records and emits a message when one is selected."""

    class DetailRequested(Message):
        def __init__(self, record: CaseRecord) -> None:
            self.record = record
            super().__init__()

    def __init__(self, title: str) -> None:
        super().__init__()
        self.title = title
        self.table = DataTable(cursor_type="row")
        self.records: list[CaseRecord] = []

    def compose(self):  # type: ignore[override]
        yield Label(self.title, id="table-title")
        yield self.table

    def on_mount(self) -> None:  # type: ignore[override]
        with contextlib.suppress(Exception):
            self.table.add_columns(*COLUMNS)

    def set_records(self, records: Iterable[CaseRecord]) -> None:
        """Store records and (if possible) refresh the rows.

        Rendering is suppressed when no Textual app is active, so the widget
        can be driven headless.
        """
        self.records = list(records)
        with contextlib.suppress(Exception):
            self.table.clear()
            for i, r in enumerate(self.records):
                self.table.add_row(
                    r.case_id,
                    "✓" if r.passed else "✗",
                    r.lhs_route,
                    format_value(r.lhs),
                    r.rhs_route,
                    format_value(r.rhs),
                    format_runtime(r.runtime_ms),
                    key=i,
                )

    def on_data_table_row_selected(self, event: DataTable.RowSelected) -> None:  # type: ignore[override]
        row_index = event.row_key
        if hasattr(row_index, "value"):
            row_index = row_index.value
        if isinstance(row_index, int) and 0 <= row_index < len(self.records):
            self.post_message(CaseTable.DetailRequested(self.records[row_index]))

    def get_selected_record(self) -> CaseRecord | None:
        """Return the record under the table cursor, if any."""
        try:
            cursor_row = self.table.cursor_row
            if cursor_row < 0:
                return None
            key = self.table.coordinate_to_cell_key((cursor_row, 0)).row_key.value
        except Exception:
            return None
        if key is not None:
            key = int(key)
        if isinstance(key, int) and 0 <= key < len(self.records):
            return self.records[key]
        return None
