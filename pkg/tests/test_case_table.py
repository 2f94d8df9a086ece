from __future__ import annotations

from fractions import Fraction
from types import SimpleNamespace

from textual.widgets import DataTable

from akzeta.harness.cases import CaseRecord
from akzeta.kernel.values import NumericValue
from akzeta.ui.case_table import CaseTable


def make_record(case_id: str, **kwargs) -> CaseRecord:
    defaults = {
        "description": "η(1,1,-1;1) = 7/8",
        "lhs_route": "theorem",
        "rhs_route": "printed",
        "lhs": Fraction(7, 8),
        "rhs": Fraction(7, 8),
        "tolerance": 1e-6,
        "passed": True,
        "runtime_ms": 12,
    }
    defaults.update(kwargs)
    return CaseRecord(case_id=case_id, **defaults)


def test_case_table_initialization():
    """Test CaseTable initialization."""
    table = CaseTable("Cases")

    assert table.title == "Cases"
    assert isinstance(table.table, DataTable)
    assert table.records == []


def test_case_table_compose():
    table = CaseTable("Cases")
    composed = list(table.compose())

    assert len(composed) == 2
    assert composed[0].id == "table-title"
    assert composed[1] == table.table


def test_set_records_stores():
    table = CaseTable("Cases")
    table.on_mount()
    records = [
        make_record("paper/a"),
        make_record("paper/b", lhs=NumericValue(-1.32, 1e-10), rhs=None, passed=False),
    ]
    table.set_records(records)
    assert table.records == records

    table.set_records(records[1:])
    assert table.records == records[1:]


def test_on_data_table_row_selected_posts_message_with_int(monkeypatch):
    table = CaseTable("Cases")
    table.on_mount()
    records = [make_record("a"), make_record("b")]
    table.set_records(records)

    posted = []
    monkeypatch.setattr(table, "post_message", lambda msg: posted.append(msg))

    class E:
        row_key = 1

    table.on_data_table_row_selected(E())

    assert len(posted) == 1
    assert isinstance(posted[0], CaseTable.DetailRequested)
    assert posted[0].record == records[1]


def test_on_data_table_row_selected_rowkey_value_posts_message(monkeypatch):
    table = CaseTable("Cases")
    records = [make_record("a"), make_record("b")]
    table.set_records(records)

    posted = []
    monkeypatch.setattr(table, "post_message", lambda msg: posted.append(msg))

    table.on_data_table_row_selected(SimpleNamespace(row_key=SimpleNamespace(value=0)))
    table.on_data_table_row_selected(SimpleNamespace(row_key=SimpleNamespace(value=5)))

    assert [m.record for m in posted] == [records[0]]


def test_get_selected_record_by_key():
    table = CaseTable("Cases")
    records = [make_record("a"), make_record("b")]
    table.set_records(records)

    class TableStub:
        cursor_row = 1

        def coordinate_to_cell_key(self, coordinate):
            return SimpleNamespace(row_key=SimpleNamespace(value=str(coordinate[0])))

    table.table = TableStub()
    assert table.get_selected_record() == records[1]


def test_get_selected_record_handles_errors():
    table = CaseTable("Cases")
    table.set_records([make_record("a")])

    class Broken:
        cursor_row = 0

        def coordinate_to_cell_key(self, coordinate):
            raise LookupError("no rows")

    table.table = Broken()
    assert table.get_selected_record() is None

    table.table = SimpleNamespace(cursor_row=-1)
    assert table.get_selected_record() is None
