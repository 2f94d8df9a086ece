"""Multiple polylogarithm coefficients and poly-Bernoulli numbers.

All quantities are exact. Generating functions are built as truncated series in
t after substituting ``z = 1 - exp(-t)`` into the z-series of the polylogarithm.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .series import BiTruncatedSeries, ExpSign, TruncatedSeries, substitute_one_minus_exp

logger = logging.getLogger(__name__)


class IndexPattern(str, Enum):
    """Shape of a signed index, as used to decide which function applies."""

    POSITIVE = "k"
    NONPOSITIVE = "-n"
    POS_NEG = "k,-n"
    NEG_POS = "-n,k"
    ONES_NEG = "1,...,1,-n"
    ALL_POSITIVE = "k1,...,kr"
    ALL_NONPOSITIVE = "-n1,...,-nr"
    MIXED = "mixed"


@dataclass(frozen=True)
class SignedIndex:
    """Ordered integer index (k_1, ..., k_r) of a multiple polylogarithm.

    Attributes:
        entries: The index entries; at least one, any sign.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a signed index needs at least one entry")
        object.__setattr__(self, "entries", tuple(int(k) for k in self.entries))

    @classmethod
    def parse(cls, text: str) -> SignedIndex:
        """Parse a comma-separated list of signed integers such as ``"2,-1"``."""
        parts = [p.strip() for p in text.strip().strip("()").split(",") if p.strip()]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as e:
            raise ValueError(f"cannot parse index {text!r}: expected comma-separated integers") from e

    @classmethod
    def coerce(cls, index: SignedIndex | Iterable[int] | int) -> SignedIndex:
        if isinstance(index, SignedIndex):
            return index
        if isinstance(index, int):
            return cls((index,))
        return cls(tuple(index))

    @property
    def depth(self) -> int:
        return len(self.entries)

    def is_ones_neg(self) -> bool:
        """True for ({1}^{r-1}, -n) with r >= 2 and n >= 0."""
        *head, last = self.entries
        return bool(head) and all(k == 1 for k in head) and last <= 0

    @property
    def pattern(self) -> IndexPattern:
        match self.entries:
            case (k,):
                return IndexPattern.POSITIVE if k >= 1 else IndexPattern.NONPOSITIVE
            case (k, n) if k >= 1 and n <= 0:
                return IndexPattern.POS_NEG
            case (n, k) if n <= 0 and k >= 1:
                return IndexPattern.NEG_POS
        if self.is_ones_neg():
            return IndexPattern.ONES_NEG
        if all(k >= 1 for k in self.entries):
            return IndexPattern.ALL_POSITIVE
        if all(k <= 0 for k in self.entries):
            return IndexPattern.ALL_NONPOSITIVE
        return IndexPattern.MIXED

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self.entries) + ")"


def mpl_coeffs(index: SignedIndex | Iterable[int], M: int) -> list[Fraction]:
    """Coefficients c_0..c_M of Li_index(z) = sum_m c_m z^m.

    ``c_m`` sums ``prod_i m_i^{-k_i}`` over chains ``m_1 < ... < m_r = m``; each
    depth level is a prefix-sum pass, so the cost is O(r * M).

    Args:
        index: The signed index.
        M: Highest power of z wanted.

    Returns:
        ``M + 1`` exact coefficients.
    """
    idx = SignedIndex.coerce(index)
    level = [Fraction(0)] + [Fraction(m) ** -idx.entries[0] for m in range(1, M + 1)]
    for k in idx.entries[1:]:
        prefix = Fraction(0)
        nxt = [Fraction(0)] * (M + 1)
        for m in range(1, M + 1):
            nxt[m] = prefix * Fraction(m) ** -k
            prefix += level[m]
        level = nxt
    return level


def li_exp_series(index: SignedIndex | Iterable[int], order: int, sign: ExpSign = ExpSign.MINUS_T) -> TruncatedSeries:
    """Li_index(1 - exp(-t)) (or ``1 - exp(t)``) as an exact series through ``t**order``."""
    return substitute_one_minus_exp(mpl_coeffs(index, order), sign, order)


def poly_bernoulli_B(index: SignedIndex | Iterable[int], m: int) -> Fraction:
    """B_m^{(index)} from ``Li(1 - e^{-t}) / (1 - e^{-t}) = sum B_m t^m / m!``.

    The series is truncated at order ``m + r``.
    """
    idx = SignedIndex.coerce(index)
    order = m + idx.depth
    quotient = li_exp_series(idx, order) / TruncatedSeries.one_minus_exp(ExpSign.MINUS_T, order)
    return quotient.egf_coefficient(m)


def poly_bernoulli_C(index: SignedIndex | Iterable[int], m: int) -> Fraction:
    """C_m^{(index)} from ``Li(1 - e^{-t}) / (e^t - 1) = sum C_m t^m / m!``."""
    idx = SignedIndex.coerce(index)
    order = m + idx.depth
    e_minus_one = TruncatedSeries.exp(1, order) - TruncatedSeries.exp(0, order)
    quotient = li_exp_series(idx, order) / e_minus_one
    return quotient.egf_coefficient(m)


def _powers(base: TruncatedSeries, count: int) -> list[TruncatedSeries]:
    out = [TruncatedSeries.exp(0, base.order)]
    for _ in range(1, count):
        out.append((out[-1] * base).truncate(base.order))
    return out


def kt_frakB_r2(k1: int, k2: int, m: int) -> Fraction:
    """Kaneko–Tsumura number 𝔅^{(-m)}_{k1,k2} (depth 2, upper index -m).

    Reads ``k1! k2! [x1^k1 x2^k2]`` of
    ``sum_{a=0}^{1} (-1)^a sum_{l1,l2 >= 1} (l1+l2-a)^m g(x1+x2)^{l1-1} g(x2)^{l2-1}``
    with ``g(y) = 1 - e^{-y}``. Factor ``g^{l-1}`` has valuation ``l-1``, so only
    ``l1 <= k1+k2+1`` and ``l2 <= k2+1`` contribute.
    """
    orders = (k1, k2)
    g = TruncatedSeries.one_minus_exp(ExpSign.MINUS_T, k1 + k2)
    powers = _powers(g, k1 + k2 + 1)
    outer = [BiTruncatedSeries.of_sum(p, orders) for p in powers]
    inner = [BiTruncatedSeries.of_second(p, orders) for p in powers[: k2 + 1]]
    total = BiTruncatedSeries({}, orders)
    for a in (0, 1):
        sign = -1 if a else 1
        for l1, big_g in enumerate(outer, start=1):
            for l2, big_h in enumerate(inner, start=1):
                weight = sign * (l1 + l2 - a) ** m
                total = total + big_g * big_h * weight
    logger.debug(f"frakB r=2 ({k1},{k2}) m={m}: {len(outer) * len(inner) * 2} generating terms")
    return total[k1, k2] * factorial(k1) * factorial(k2)
