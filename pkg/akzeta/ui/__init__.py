from .case_table import CaseTable
from .status import StatusManager, summarize

__all__ = ["CaseTable", "StatusManager", "summarize"]
