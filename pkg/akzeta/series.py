"""Exact truncated power series in one and two variables."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .errors import SeriesError

logger = logging.getLogger(__name__)


class ExpSign(str, Enum):
    """Sign of t in the substitution ``z = 1 - exp(sign * t)``."""

    MINUS_T = "-t"
    PLUS_T = "+t"


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t known exactly through ``t**order``.

    Attributes:
        coefficients: Coefficients of ``t**0 .. t**order``.
        order: Truncation order N; terms beyond it are unknown, not zero.
    """

    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError(f"truncation order must be nonnegative, got {self.order}")
        coeffs = [Fraction(c) for c in self.coefficients[: self.order + 1]]
        coeffs += [Fraction(0)] * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_sequence(cls, coefficients: Sequence[int | Fraction], order: int) -> TruncatedSeries:
        return cls(tuple(Fraction(c) for c in coefficients), order)

    @classmethod
    def exp(cls, scale: int | Fraction, order: int) -> TruncatedSeries:
        """``exp(scale * t)`` through ``t**order``."""
        scale = Fraction(scale)
        return cls(tuple(scale**j / factorial(j) for j in range(order + 1)), order)

    @classmethod
    def one_minus_exp(cls, sign: ExpSign, order: int) -> TruncatedSeries:
        """``1 - exp(-t)`` or ``1 - exp(t)``; valuation 1."""
        e = cls.exp(-1 if sign is ExpSign.MINUS_T else 1, order)
        return cls((Fraction(0), *(-c for c in e.coefficients[1:])), order)

    def __getitem__(self, j: int) -> Fraction:
        if j > self.order:
            raise SeriesError(f"coefficient t^{j} is beyond truncation order {self.order}")
        return self.coefficients[j] if j >= 0 else Fraction(0)

    @property
    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        for j, c in enumerate(self.coefficients):
            if c != 0:
                return j
        return None

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(tuple(self[j] + other[j] for j in range(order + 1)), order)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coefficients), self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | int | Fraction) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            factor = Fraction(other)
            return TruncatedSeries(tuple(c * factor for c in self.coefficients), self.order)
        # a factor of valuation v lets the product be known v orders beyond the other factor
        va, vb = self.valuation, other.valuation
        if va is None or vb is None:
            return TruncatedSeries((), min(self.order, other.order))
        order = min(self.order + vb, other.order + va)
        out = [Fraction(0)] * (order + 1)
        for i in range(va, min(self.order, order) + 1):
            a = self.coefficients[i]
            if a == 0:
                continue
            for j in range(vb, min(other.order, order - i) + 1):
                out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(tuple(out), order)

    __rmul__ = __mul__

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to order {order}")
        return TruncatedSeries(self.coefficients, order)

    def reciprocal(self) -> TruncatedSeries:
        """Exact inverse of a unit series (nonzero constant term)."""
        c0 = self.coefficients[0]
        if c0 == 0:
            raise SeriesError("reciprocal requires a nonzero constant term")
        inv = [Fraction(1) / c0]
        for j in range(1, self.order + 1):
            acc = sum((self.coefficients[i] * inv[j - i] for i in range(1, j + 1)), Fraction(0))
            inv.append(-acc / c0)
        return TruncatedSeries(tuple(inv), self.order)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        """Divide by a series of valuation v, factoring ``t**v`` out of both.

        The quotient is known through order ``min(self.order, other.order) - v``.

        Raises:
            SeriesError: If the divisor vanishes to its known order or the
                numerator's valuation is smaller than the divisor's.
        """
        v = other.valuation
        if v is None:
            raise SeriesError("division by a series that vanishes to its known order")
        num_v = self.valuation
        if num_v is not None and num_v < v:
            raise SeriesError(f"numerator valuation {num_v} is below divisor valuation {v}")
        order = min(self.order, other.order) - v
        if order < 0:
            raise SeriesError("quotient would carry no known coefficients")
        num = TruncatedSeries(self.coefficients[v:], order)
        den = TruncatedSeries(other.coefficients[v:], order)
        return num * den.reciprocal()

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """``self(inner(t))`` for an inner series of valuation >= 1 (Horner scheme)."""
        if inner.coefficients[0] != 0:
            raise SeriesError("composition requires an inner series with zero constant term")
        v = inner.valuation
        # outer terms beyond its order only reach t^((order+1)*v) and above
        order = inner.order if v is None else min(inner.order, (self.order + 1) * v - 1)
        acc = TruncatedSeries((), order)
        for c in reversed(self.coefficients):
            acc = acc * inner
            acc = TruncatedSeries((acc.coefficients[0] + c, *acc.coefficients[1:]), min(acc.order, order))
        return acc

    def egf_coefficient(self, m: int) -> Fraction:
        """``m! * [t^m]``, the m-th number of an exponential generating function."""
        return self[m] * factorial(m)


def substitute_one_minus_exp(zcoeffs: Sequence[int | Fraction], sign: ExpSign, order: int) -> TruncatedSeries:
    """Compose a z-series with ``z = 1 - exp(-t)`` or ``z = 1 - exp(t)``.

    Since z has valuation 1 in t, coefficients of ``z**0 .. z**order`` determine
    the result through ``t**order``.

    Args:
        zcoeffs: Coefficients of the z-series, at least ``order + 1`` of them.
        sign: Which exponential.
        order: Truncation order N.

    Returns:
        The composed series through ``t**order``.

    Raises:
        SeriesError: If fewer than ``order + 1`` z-coefficients are supplied.
    """
    if len(zcoeffs) < order + 1:
        raise SeriesError(f"need {order + 1} z-coefficients for order {order}, got {len(zcoeffs)}")
    outer = TruncatedSeries.from_sequence(zcoeffs[: order + 1], order)
    return outer.compose(TruncatedSeries.one_minus_exp(sign, order))


@dataclass(frozen=True)
class BiTruncatedSeries:
    """Power series in x1, x2 known exactly through ``x1**order1 * x2**order2``.

    Attributes:
        coefficients: Map from ``(i, j)`` to the coefficient of ``x1**i * x2**j``.
        orders: Truncation orders ``(N1, N2)``.
    """

    coefficients: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    orders: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        n1, n2 = self.orders
        kept = {
            (i, j): Fraction(c) for (i, j), c in self.coefficients.items() if i <= n1 and j <= n2 and c != 0
        }
        object.__setattr__(self, "coefficients", kept)

    @classmethod
    def of_sum(cls, series: TruncatedSeries, orders: tuple[int, int]) -> BiTruncatedSeries:
        """``f(x1 + x2)`` for a univariate ``f``; ``[x1^i x2^j] = f_{i+j} * C(i+j, i)``."""
        n1, n2 = orders
        if n1 + n2 > series.order:
            raise SeriesError(f"f(x1+x2) to orders {orders} needs f through order {n1 + n2}")
        coeffs = {(i, j): series[i + j] * comb(i + j, i) for i in range(n1 + 1) for j in range(n2 + 1)}
        return cls(coeffs, orders)

    @classmethod
    def of_second(cls, series: TruncatedSeries, orders: tuple[int, int]) -> BiTruncatedSeries:
        """``f(x2)`` for a univariate ``f``."""
        n2 = orders[1]
        if n2 > series.order:
            raise SeriesError(f"f(x2) to order {n2} needs f through order {n2}")
        return cls({(0, j): series[j] for j in range(n2 + 1)}, orders)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coefficients.get(key, Fraction(0))

    def __add__(self, other: BiTruncatedSeries) -> BiTruncatedSeries:
        orders = (min(self.orders[0], other.orders[0]), min(self.orders[1], other.orders[1]))
        out = dict(self.coefficients)
        for key, c in other.coefficients.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiTruncatedSeries(out, orders)

    def __mul__(self, other: BiTruncatedSeries | int | Fraction) -> BiTruncatedSeries:
        if not isinstance(other, BiTruncatedSeries):
            factor = Fraction(other)
            return BiTruncatedSeries({k: c * factor for k, c in self.coefficients.items()}, self.orders)
        n1, n2 = min(self.orders[0], other.orders[0]), min(self.orders[1], other.orders[1])
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coefficients.items():
            for (i2, j2), b in other.coefficients.items():
                i, j = i1 + i2, j1 + j2
                if i <= n1 and j <= n2:
                    out[i, j] = out.get((i, j), Fraction(0)) + a * b
        return BiTruncatedSeries(out, (n1, n2))

    __rmul__ = __mul__
