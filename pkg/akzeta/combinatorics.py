"""Exact integer and rational building blocks.

Everything here is exact: Python integers and `fractions.Fraction`. Integer-valued
quantities (binomials, Stirling numbers) are returned as ``int``, which is a
rational in the numeric tower and mixes freely with ``Fraction``.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Callable
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .polynomial import BasisPolynomial

logger = logging.getLogger(__name__)


class BernoulliConvention(str, Enum):
    """Sign convention for B_1: ``plus`` gives +1/2, ``minus`` gives -1/2."""

    PLUS = "plus"
    MINUS = "minus"


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when ``k`` lies outside ``[0, n]``."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


_bernoulli_lock = threading.Lock()
_bernoulli_minus: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(j: int) -> None:
    with _bernoulli_lock:
        while len(_bernoulli_minus) <= j:
            n = len(_bernoulli_minus)
            acc = sum((comb(n + 1, i) * b for i, b in enumerate(_bernoulli_minus)), Fraction(0))
            _bernoulli_minus.append(-acc / (n + 1))


def bernoulli(j: int, convention: BernoulliConvention) -> Fraction:
    """Bernoulli number B_j.

    Computed from ``sum_{i=0}^{n} C(n+1, i) B_i = 0`` (minus convention) in exact
    arithmetic; the plus convention is ``(-1)^j`` times the minus one.

    Args:
        j: Index, ``j >= 0``.
        convention: Which value B_1 takes.

    Returns:
        The exact Bernoulli number.
    """
    if j < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {j}")
    if j >= len(_bernoulli_minus):
        _extend_bernoulli(j)
    value = _bernoulli_minus[j]
    if convention is BernoulliConvention.PLUS and j % 2:
        return -value
    return value


def zeta_nonpositive(m: int) -> Fraction:
    """Exact Riemann zeta value ζ(-m) for ``m >= 0``."""
    if m < 0:
        raise ValueError(f"zeta_nonpositive expects m >= 0, got {m}")
    if m == 0:
        return Fraction(-1, 2)
    return -bernoulli(m + 1, BernoulliConvention.MINUS) / (m + 1)


class _TriangleTable:
    """Append-only triangle of integers, grown row by row on demand.

    Rows are only ever appended, so a value once read never changes.
    """

    def __init__(self, name: str, next_row: Callable[[tuple[int, ...], int], tuple[int, ...]]) -> None:
        self._name = name
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._next_row = next_row
        self._lock = threading.Lock()

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(self._next_row(self._rows[-1], len(self._rows)))
                logger.debug(f"{self._name} table grown to {len(self._rows)} rows")
        return self._rows[n][k]


def _at(row: tuple[int, ...], k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


def _stirling1_row(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)
    return tuple(_at(prev, k - 1) + (n - 1) * _at(prev, k) for k in range(n + 1))


def _stirling2_row(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # S(n, k) = k S(n-1, k) + S(n-1, k-1)
    return tuple(k * _at(prev, k) + _at(prev, k - 1) for k in range(n + 1))


_stirling1 = _TriangleTable("stirling1", _stirling1_row)
_stirling2 = _TriangleTable("stirling2", _stirling2_row)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind; zero outside the triangle."""
    return _stirling1(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind; zero outside the triangle."""
    return _stirling2(n, k)


@lru_cache(maxsize=None)
def eulerian_poly(i: int) -> BasisPolynomial:
    """Eulerian polynomial ℰ_i(z), the numerator of ``Li_{-i}(z) * (1 - z)**(i + 1)``.

    Normalized so that ℰ_0(z) = z, which makes ``Li_0(z) = ℰ_0(z) / (1 - z)`` hold.

    Args:
        i: Order, ``i >= 0``.

    Returns:
        ℰ_i in the powers-of-z basis; degree ``max(i, 1)``.
    """
    if i < 0:
        raise ValueError(f"Eulerian polynomial order must be nonnegative, got {i}")
    if i == 0:
        return BasisPolynomial.monomial(1)
    coeffs = [Fraction(0)] * (i + 1)
    for j in range(i):
        acc = 0
        for ell in range(j + 2):
            term = binomial(i + 1, ell) * (j - ell + 1) ** i
            acc += -term if ell % 2 else term
        coeffs[i - j] += acc
    return BasisPolynomial(tuple(coeffs))
