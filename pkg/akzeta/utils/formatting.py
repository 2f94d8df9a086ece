from __future__ import annotations

from fractions import Fraction

from ..kernel.values import NumericValue

# Time conversion constants
MS_PER_SECOND = 1000
SECONDS_PER_MINUTE = 60
MS_PER_MINUTE = MS_PER_SECOND * SECONDS_PER_MINUTE


def format_runtime(ms: int) -> str:
    """Convert a duration in milliseconds to a short human-readable string.

    Args:
        ms: Duration in milliseconds.

    Returns:
        ``"850ms"`` below a second, ``"2.4s"`` below a minute, else ``"1m 05s"``.
    """
    if ms < MS_PER_SECOND:
        return f"{ms}ms"
    if ms < MS_PER_MINUTE:
        return f"{ms / MS_PER_SECOND:.1f}s"
    minutes, rest = divmod(ms // MS_PER_SECOND, SECONDS_PER_MINUTE)
    return f"{minutes}m {rest:02d}s"


def format_value(v: NumericValue | Fraction | int | None, digits: int = 12) -> str:
    """Render an exact or numeric value for a table cell or terminal line.

    Rationals print reduced (``"7/8"``, ``"-1"``); numeric values print with
    ``digits`` significant digits and their error bar.
    """
    if v is None:
        return "-"
    if isinstance(v, NumericValue):
        return f"{v.value:.{digits}g} ± {v.abs_error:.1e}"
    return str(Fraction(v))
