from __future__ import annotations

import math
import sys
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class NumericValue:
    """Floating-point value paired with an absolute-error estimate.

    Arithmetic propagates the estimate to first order and adds a rounding
    allowance of one unit in the last place of the result.

    Attributes:
        value: The approximation.
        abs_error: Nonnegative bound on ``|value - true value|``.
    """

    value: float
    abs_error: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "abs_error", abs(float(self.abs_error)))

    @classmethod
    def exact(cls, q: Fraction | int | float) -> NumericValue:
        """Float image of an exact number; the error is the conversion rounding."""
        v = float(q)
        return cls(v, EPS * abs(v))

    @classmethod
    def total(cls, values: Iterable[NumericValue]) -> NumericValue:
        """Compensated sum of many values."""
        items = list(values)
        v = math.fsum(x.value for x in items)
        return cls(v, math.fsum(x.abs_error for x in items) + EPS * abs(v))

    def __float__(self) -> float:
        return self.value

    def _coerce(self, other: NumericValue | Fraction | float) -> NumericValue:
        return other if isinstance(other, NumericValue) else NumericValue.exact(other)

    def __add__(self, other: NumericValue | Fraction | float) -> NumericValue:
        o = self._coerce(other)
        v = self.value + o.value
        return NumericValue(v, self.abs_error + o.abs_error + EPS * abs(v))

    __radd__ = __add__

    def __neg__(self) -> NumericValue:
        return NumericValue(-self.value, self.abs_error)

    def __sub__(self, other: NumericValue | Fraction | float) -> NumericValue:
        return self + (-self._coerce(other))

    def __rsub__(self, other: NumericValue | Fraction | float) -> NumericValue:
        return self._coerce(other) - self

    def __mul__(self, other: NumericValue | Fraction | float) -> NumericValue:
        o = self._coerce(other)
        v = self.value * o.value
        err = abs(self.value) * o.abs_error + abs(o.value) * self.abs_error + self.abs_error * o.abs_error
        return NumericValue(v, err + EPS * abs(v))

    __rmul__ = __mul__

    def __truediv__(self, other: NumericValue | Fraction | float) -> NumericValue:
        o = self._coerce(other)
        if abs(o.value) <= o.abs_error:
            raise ZeroDivisionError("divisor is not bounded away from zero")
        v = self.value / o.value
        err = (self.abs_error + abs(v) * o.abs_error) / (abs(o.value) - o.abs_error)
        return NumericValue(v, err + EPS * abs(v))

    def distance(self, other: NumericValue | Fraction | float) -> float:
        return abs(self.value - self._coerce(other).value)

    def agrees_with(self, other: NumericValue | Fraction | float, tolerance: float = 0.0) -> bool:
        """True when the values differ by at most ``tolerance`` plus both error bars."""
        o = self._coerce(other)
        return self.distance(o) <= tolerance + self.abs_error + o.abs_error

    def __str__(self) -> str:
        return f"{self.value!r} +/- {self.abs_error:.1e}"
