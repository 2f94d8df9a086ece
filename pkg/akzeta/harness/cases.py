from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from ..config import RunConfig
from ..kernel.values import NumericValue

logger = logging.getLogger(__name__)

Value = NumericValue | Fraction


@dataclass(frozen=True)
class CaseRecord:
    """Outcome of one verification case.

    Attributes:
        case_id: Stable identifier; reports are ordered by it.
        description: What is compared; holds the exception text when a route failed.
        lhs_route: Name of the route that produced ``lhs``.
        rhs_route: Name of the route that produced ``rhs``.
        lhs: Left value, exact or numeric; None when its route raised.
        rhs: Right value, exact or numeric; None when its route raised.
        tolerance: Comparison tolerance added on top of both error bars.
        passed: Whether the values agree (``"pass"`` in reports).
        runtime_ms: Wall time of both routes.
    """

    case_id: str
    description: str
    lhs_route: str
    rhs_route: str
    lhs: Value | None
    rhs: Value | None
    tolerance: float
    passed: bool
    runtime_ms: int


def _is_exact(v: Value) -> bool:
    return isinstance(v, int | Fraction)


def values_agree(lhs: Value, rhs: Value, tolerance: float) -> bool:
    """Agreement rule of the harness.

    Two exact values must be equal. Otherwise ``|lhs - rhs|`` may not exceed
    ``tolerance`` plus the reported error bars; NaN never agrees.
    """
    if _is_exact(lhs) and _is_exact(rhs):
        return Fraction(lhs) == Fraction(rhs)
    left = lhs if isinstance(lhs, NumericValue) else NumericValue.exact(lhs)
    if math.isnan(left.value) or (isinstance(rhs, NumericValue) and math.isnan(rhs.value)):
        return False
    return left.agrees_with(rhs, tolerance)


@dataclass(frozen=True)
class Case:
    """A comparison of two independent routes to one quantity.

    Attributes:
        case_id: Stable identifier.
        description: Human-readable statement of the identity.
        lhs_route: Name of the first route.
        rhs_route: Name of the second route.
        lhs: Computes the first value under a run configuration.
        rhs: Computes the second value.
        tolerance: Overrides ``RunConfig.tolerance`` when set.
    """

    case_id: str
    description: str
    lhs_route: str
    rhs_route: str
    lhs: Callable[[RunConfig], Value]
    rhs: Callable[[RunConfig], Value]
    tolerance: float | None = None

    def run(self, config: RunConfig) -> CaseRecord:
        """Evaluate both routes and compare them; exceptions become failing records."""
        tolerance = config.tolerance if self.tolerance is None else self.tolerance
        start = time.perf_counter()
        lhs: Value | None = None
        rhs: Value | None = None
        description = self.description
        try:
            lhs = self.lhs(config)
            rhs = self.rhs(config)
            passed = values_agree(lhs, rhs, tolerance)
        except Exception as e:
            logger.warning(f"case {self.case_id} raised {type(e).__name__}: {e}")
            description = f"{self.description} [error: {type(e).__name__}: {e}]"
            passed = False
        runtime_ms = round((time.perf_counter() - start) * 1000)
        if not passed and lhs is not None and rhs is not None:
            logger.warning(f"case {self.case_id} failed: {lhs} vs {rhs}")
        return CaseRecord(
            self.case_id, description, self.lhs_route, self.rhs_route, lhs, rhs, tolerance, passed, runtime_ms
        )
