"""Γ on the positive reals and Riemann/Hurwitz zeta by Euler–Maclaurin."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from ..combinatorics import BernoulliConvention, bernoulli
from ..errors import DomainError
from .values import EPS, NumericValue

logger = logging.getLogger(__name__)

# direct terms before the Euler–Maclaurin tail, and Bernoulli corrections used
EM_DIRECT_TERMS = 20
EM_CORRECTIONS = 8
# Γ(171.62...) is the largest value below float max
GAMMA_MAX_ARG = 171.6


@lru_cache(maxsize=None)
def _em_weights() -> tuple[float, ...]:
    # B_{2j} / (2j)!
    return tuple(
        float(bernoulli(2 * j, BernoulliConvention.MINUS) / math.factorial(2 * j))
        for j in range(1, EM_CORRECTIONS + 2)
    )


def _is_positive_integer(x: float | Fraction) -> bool:
    return float(x).is_integer() and x > 0


def gamma_real(x: float | Fraction) -> NumericValue:
    """Γ(x) for real ``0 < x <= GAMMA_MAX_ARG``; exact factorial path at positive integers.

    Raises:
        DomainError: If ``x <= 0``, or if ``x > GAMMA_MAX_ARG`` where Γ(x)
            overflows a float.
    """
    if x <= 0:
        raise DomainError(f"gamma_real requires x > 0, got {x}")
    if x > GAMMA_MAX_ARG:
        raise DomainError(f"Γ({float(x)}) overflows a float (largest argument {GAMMA_MAX_ARG})")
    if _is_positive_integer(x):
        return NumericValue.exact(math.factorial(int(x) - 1))
    v = float(mpmath.gamma(mpmath.mpf(float(x))))
    return NumericValue(v, 4 * EPS * abs(v))


def hurwitz_num(s: float, alpha: float | Fraction = 1) -> NumericValue:
    """Hurwitz zeta ζ(s, α) = sum_{m >= 0} (m + α)^{-s} for ``s > 1``, ``α > 0``.

    Sums ``EM_DIRECT_TERMS`` terms directly and corrects the tail with the
    integral, the half term and ``EM_CORRECTIONS`` Bernoulli terms; the error
    estimate is the first omitted correction plus rounding.

    Raises:
        DomainError: If ``s <= 1`` or ``α <= 0``.
    """
    if s <= 1:
        raise DomainError(f"Hurwitz zeta requires s > 1, got {s}")
    if alpha <= 0:
        raise DomainError(f"Hurwitz zeta requires a positive shift, got {alpha}")
    s = float(s)
    a = float(alpha)
    direct = [(m + a) ** -s for m in range(EM_DIRECT_TERMS)]
    x = EM_DIRECT_TERMS + a
    tail = [x ** (1 - s) / (s - 1), 0.5 * x**-s]
    rising = s  # s (s+1) ... (s+2j-2)
    power = x ** (-s - 1)
    weights = _em_weights()
    for j in range(EM_CORRECTIONS):
        tail.append(weights[j] * rising * power)
        rising *= (s + 2 * j + 1) * (s + 2 * j + 2)
        power /= x * x
    bound = abs(weights[EM_CORRECTIONS] * rising * power)
    value = math.fsum(direct + tail)
    return NumericValue(value, bound + 8 * EPS * abs(value))


def zeta_num(s: float) -> NumericValue:
    """Riemann zeta ζ(s) for real ``s > 1``."""
    return hurwitz_num(s, 1)


@lru_cache(maxsize=None)
def zeta_int(n: int) -> float:
    """ζ(n) as a float for integers ``n >= 2`` (cached)."""
    return zeta_num(n).value
