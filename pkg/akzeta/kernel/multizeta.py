"""Multiple zeta, zeta-star and Hurwitz zeta-star values.

Exponent tuples are ordered innermost first: ``(p_1, ..., p_n)`` stands for
``sum_{m_1 < ... < m_n} m_1^{-p_1} ... m_n^{-p_n}``, so ``p_n`` is the outermost
exponent and convergence needs ``p_n >= 2``. This matches the ordering of
multiple polylogarithm indices elsewhere in the package.

Two routes:

``holder``
    ζ(p) as a sum of products of multiple polylogarithms at 1/2 obtained by
    cutting the iterated integral at 1/2. Every factor converges like 2^{-m}.
    Star values are expanded into strict ones; equal integer shifts are peeled
    back to shift 1.

``direct``
    Nested sums to a cutoff N by prefix-sum passes, with the part of the sum
    beyond N written as products of exact head sums and tail sums. Depth-1
    tails are Hurwitz zeta values; deeper tails use the simplex integral plus a
    half-diagonal correction. Handles arbitrary positive shifts.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError
from .values import EPS, NumericValue
from .zeta import hurwitz_num

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
HOLDER_CUTOFF = 120
DIRECT_CUTOFF = 10_000


class ZetaMethod(str, Enum):
    """Evaluation route for multiple zeta values."""

    HOLDER = "holder"
    DIRECT = "direct"


@dataclass(frozen=True)
class HurwitzStarArgs:
    """Exponents and shifts of a multiple Hurwitz zeta-star value.

    ``ζ*(p_1, ..., p_n; α_1, ..., α_n) = sum_{0 <= m_1 <= ... <= m_n} prod (m_i + α_i)^{-p_i}``.
    The empty tuple denotes the value 1.

    Attributes:
        exponents: Integers ``>= 1`` with the last one ``>= 2``.
        shifts: Positive rationals, one per exponent.
    """

    exponents: tuple[int, ...]
    shifts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(p) for p in self.exponents)
        shifts = tuple(Fraction(a) for a in self.shifts)
        if len(exps) != len(shifts):
            raise DomainError(f"{len(exps)} exponents but {len(shifts)} shifts")
        _check_exponents(exps)
        if any(a <= 0 for a in shifts):
            raise DomainError(f"Hurwitz shifts must be positive, got {_fmt(shifts)}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "shifts", shifts)

    @classmethod
    def uniform(cls, exponents: Iterable[int], shift: int | Fraction = 1) -> HurwitzStarArgs:
        exps = tuple(exponents)
        return cls(exps, (Fraction(shift),) * len(exps))

    @property
    def depth(self) -> int:
        return len(self.exponents)

    def common_integer_shift(self) -> int | None:
        """The shared shift when all shifts are one and the same positive integer."""
        if not self.shifts:
            return 1
        first = self.shifts[0]
        if first.denominator == 1 and all(a == first for a in self.shifts):
            return int(first)
        return None


def _fmt(values: Sequence[object]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _check_exponents(exps: Sequence[int]) -> None:
    if any(p < 1 for p in exps):
        raise DomainError(f"exponents must be positive integers, got {_fmt(exps)}")
    if exps and exps[-1] < 2:
        raise DomainError(f"divergent exponent pattern {_fmt(exps)}: the outermost exponent must be >= 2")


# -- holder route ------------------------------------------------------------


def _word(exps: Sequence[int]) -> str:
    # letters outermost first; "0" is dt/t and "1" is dt/(1-t)
    return "".join("0" * (p - 1) + "1" for p in reversed(exps))


def _word_index(word: str) -> tuple[int, ...]:
    outer_first = []
    run = 0
    for letter in word:
        if letter == "0":
            run += 1
        else:
            outer_first.append(run + 1)
            run = 0
    return tuple(reversed(outer_first))


def _dual(word: str) -> str:
    return "".join("1" if c == "0" else "0" for c in reversed(word))


@lru_cache(maxsize=4096)
def _li_half(index: tuple[int, ...], cutoff: int) -> NumericValue:
    """Li_index(1/2) summed to ``m_n = cutoff``; the remainder is geometric."""
    if not index:
        return NumericValue(1.0)
    level = [0.0] + [m ** -index[0] for m in range(1, cutoff + 1)]
    for k in index[1:]:
        prefix = 0.0
        nxt = [0.0] * (cutoff + 1)
        for m in range(1, cutoff + 1):
            nxt[m] = prefix * m**-k
            prefix += level[m]
        level = nxt
    terms = [level[m] * 0.5**m for m in range(1, cutoff + 1)]
    value = math.fsum(terms)
    return NumericValue(value, 4 * abs(terms[-1]) + 4 * EPS * len(index) * abs(value))


@lru_cache(maxsize=4096)
def _strict_holder(exps: tuple[int, ...], cutoff: int) -> NumericValue:
    if not exps:
        return NumericValue(1.0)
    word = _word(exps)
    parts = [
        _li_half(_word_index(_dual(word[:j])), cutoff) * _li_half(_word_index(word[j:]), cutoff)
        for j in range(len(word) + 1)
    ]
    return NumericValue.total(parts)


def star_merges(exps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Strict exponent tuples whose sum is ζ*(exps): each comma kept or merged."""
    n = len(exps)
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        out = [exps[0]]
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                out[-1] += exps[i]
            else:
                out.append(exps[i])
        yield tuple(out)


def _star_holder(exps: tuple[int, ...], cutoff: int) -> NumericValue:
    return NumericValue.total(_strict_holder(q, cutoff) for q in star_merges(exps))


@lru_cache(maxsize=4096)
def _shifted_holder(exps: tuple[int, ...], shift: int, strict: bool, cutoff: int) -> NumericValue:
    """Sum over ``shift <= j_1 (<|<=) ... (<|<=) j_n`` of prod j_i^{-p_i}."""
    if not exps:
        return NumericValue(1.0)
    if shift == 1:
        return _strict_holder(exps, cutoff) if strict else _star_holder(exps, cutoff)
    # remove the terms with j_1 = shift - 1
    head = NumericValue.exact(Fraction(1, (shift - 1) ** exps[0]))
    rest_shift = shift if strict else shift - 1
    return _shifted_holder(exps, shift - 1, strict, cutoff) - head * _shifted_holder(
        exps[1:], rest_shift, strict, cutoff
    )


# -- direct route ------------------------------------------------------------


def _simplex_integral(q: Sequence[int], x: float) -> float:
    # integral of prod t_j^{-q_j} over x <= t_1 <= ... <= t_d
    denom = 1.0
    acc = 0
    for qj in reversed(q):
        acc += qj - 1
        denom *= acc
    return x ** (len(q) - sum(q)) / denom


def _tail(q: tuple[int, ...], shifts: tuple[float, ...], strict: bool, cutoff: int) -> NumericValue:
    """Sum over ``cutoff <= m_1 (<|<=) ... (<|<=) m_d`` of prod (m_j + α_j)^{-q_j}."""
    d = len(q)
    if d == 0:
        return NumericValue(1.0)
    if d == 1:
        return hurwitz_num(q[0], cutoff + shifts[0])
    x = cutoff + shifts[0] - 0.5
    main = _simplex_integral(q, x)
    merged = [q[:j] + (q[j] + q[j + 1],) + q[j + 2 :] for j in range(d - 1)]
    diagonal = 0.5 * math.fsum(_simplex_integral(mq, x) for mq in merged)
    value = main - diagonal if strict else main + diagonal
    spread = sum(qj * abs(a - shifts[0]) for qj, a in zip(q, shifts, strict=True))
    err = abs(main) * ((d + sum(q)) ** 2 / x**2 + spread / x)
    return NumericValue(value, err)


def _direct(exps: tuple[int, ...], shifts: tuple[float, ...], strict: bool, cutoff: int) -> NumericValue:
    """Head sums over ``m < cutoff`` by prefix passes, times the matching tails."""
    heads = [NumericValue(1.0)]
    level: list[float] | None = None
    for i, (q, a) in enumerate(zip(exps, shifts, strict=True)):
        f = [(m + a) ** -q for m in range(cutoff)]
        if level is None:
            level = f
        else:
            cur = []
            prefix = 0.0
            for m in range(cutoff):
                if not strict:
                    prefix += level[m]
                cur.append(prefix * f[m])
                if strict:
                    prefix += level[m]
            level = cur
        total = math.fsum(level)
        heads.append(NumericValue(total, cutoff * (i + 1) * EPS * abs(total)))
    parts = [heads[i] * _tail(exps[i:], shifts[i:], strict, cutoff) for i in range(len(exps) + 1)]
    return NumericValue.total(parts)


# -- public evaluators -------------------------------------------------------


def _evaluate(
    args: HurwitzStarArgs, strict: bool, tol: float, method: ZetaMethod | str, cutoff: int | None
) -> NumericValue:
    method = ZetaMethod(method)
    if args.depth == 0:
        return NumericValue(1.0)
    shift = args.common_integer_shift()
    if method is ZetaMethod.HOLDER and shift is None:
        logger.debug(f"shifts {_fmt(args.shifts)} are not a common integer; using the direct route")
        method = ZetaMethod.DIRECT
    if method is ZetaMethod.HOLDER:
        value = _shifted_holder(args.exponents, shift, strict, cutoff or HOLDER_CUTOFF)
    else:
        # strict sums start at m = 0 too, so (m + α) with α = 1 gives the usual ζ
        value = _direct(args.exponents, tuple(float(a) for a in args.shifts), strict, cutoff or DIRECT_CUTOFF)
    if value.abs_error > tol:
        logger.warning(
            f"{'ζ' if strict else 'ζ*'}{_fmt(args.exponents)} via {method.value}: "
            f"error estimate {value.abs_error:.1e} exceeds tolerance {tol:.1e}"
        )
    return value


def mzv_num(
    exponents: Iterable[int],
    tol: float = DEFAULT_TOL,
    method: ZetaMethod | str = ZetaMethod.HOLDER,
    cutoff: int | None = None,
) -> NumericValue:
    """Multiple zeta value ζ(p_1, ..., p_n), strict ordering.

    Raises:
        DomainError: If an exponent is below 1 or the outermost one is below 2.
    """
    return _evaluate(HurwitzStarArgs.uniform(exponents), True, tol, method, cutoff)


def mzsv_num(
    exponents: Iterable[int],
    tol: float = DEFAULT_TOL,
    method: ZetaMethod | str = ZetaMethod.HOLDER,
    cutoff: int | None = None,
) -> NumericValue:
    """Multiple zeta-star value ζ*(p_1, ..., p_n), weak ordering.

    Raises:
        DomainError: If an exponent is below 1 or the outermost one is below 2.
    """
    return _evaluate(HurwitzStarArgs.uniform(exponents), False, tol, method, cutoff)


def mhzsv_num(
    args: HurwitzStarArgs,
    tol: float = DEFAULT_TOL,
    method: ZetaMethod | str = ZetaMethod.HOLDER,
    cutoff: int | None = None,
) -> NumericValue:
    """Multiple Hurwitz zeta-star value; the empty argument gives 1."""
    return _evaluate(args, False, tol, method, cutoff)


def mhzv_num(
    args: HurwitzStarArgs,
    tol: float = DEFAULT_TOL,
    method: ZetaMethod | str = ZetaMethod.HOLDER,
    cutoff: int | None = None,
) -> NumericValue:
    """Strict counterpart of :func:`mhzsv_num` (``0 <= m_1 < ... < m_n``)."""
    return _evaluate(args, True, tol, method, cutoff)


@lru_cache(maxsize=8192)
def star_value(exponents: tuple[int, ...], shift: int = 1) -> NumericValue:
    """Cached ζ*(exponents; {shift}^n) on the default route, as the theorem sums use it."""
    return mhzsv_num(HurwitzStarArgs.uniform(exponents, shift))


@lru_cache(maxsize=8192)
def strict_value(exponents: tuple[int, ...]) -> NumericValue:
    """Cached ζ(exponents) on the default route."""
    return mzv_num(exponents)
