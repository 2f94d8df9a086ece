"""Double-exponential quadrature on (0, ∞).

The substitution ``t = exp(π/2 · sinh u)`` turns an integrand with algebraic
behaviour at 0 and exponential decay at ∞ into one that decays double
exponentially in both directions of u, where the trapezoid rule converges
geometrically. Each level halves the step and only evaluates the new odd nodes.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

from .values import EPS, NumericValue

logger = logging.getLogger(__name__)

T_MIN = 1e-250
T_MAX = 250.0
MIN_LEVEL = 3


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its diagnostics.

    Attributes:
        value: Integral and error estimate.
        level: Finest level reached; the step is ``2**-level``.
        evaluations: Number of integrand evaluations.
    """

    value: NumericValue
    level: int
    evaluations: int


def _node(u: float) -> tuple[float, float]:
    half_pi_sinh = 0.5 * math.pi * math.sinh(u)
    t = math.exp(half_pi_sinh)
    return t, 0.5 * math.pi * math.cosh(u) * t


def exp_sinh(
    f: Callable[[float], float], tol: float = 1e-9, max_level: int = 7, t_max: float = T_MAX
) -> QuadratureResult:
    """Integrate ``f`` over ``(0, ∞)``.

    Nodes with ``t`` outside ``[T_MIN, t_max]`` are dropped; the integrand must
    be negligible there. An integrand growing like ``t^{s-1}`` at 0 loses about
    ``T_MIN^s / s``, which the error estimate does not see. The error estimate is
    the difference between the last two levels plus a rounding allowance.

    Args:
        f: Integrand, finite on ``(0, ∞)``.
        tol: Absolute error wanted.
        max_level: Finest level tried.
        t_max: Upper cut of the integration range.

    Returns:
        A `QuadratureResult`.
    """
    u_lo = math.asinh(2.0 / math.pi * math.log(T_MIN))
    u_hi = math.asinh(2.0 / math.pi * math.log(t_max))
    total = 0.0
    magnitude = 0.0
    evaluations = 0
    previous: float | None = None
    estimate = 0.0
    error = math.inf
    level = 0
    for level in range(max_level + 1):
        h = 2.0**-level
        # level 0 takes every integer node, later levels the odd multiples of h
        stride = 1 if level == 0 else 2
        j_lo = math.ceil(u_lo / h)
        if level > 0 and j_lo % 2 == 0:
            j_lo += 1
        contributions = []
        for j in range(j_lo, math.floor(u_hi / h) + 1, stride):
            t, weight = _node(j * h)
            value = f(t) * weight
            contributions.append(value)
            magnitude += abs(value)
        evaluations += len(contributions)
        total += math.fsum(contributions)
        estimate = h * total
        rounding = 16 * EPS * h * magnitude
        if previous is not None:
            error = abs(estimate - previous) + rounding
            logger.debug(f"exp-sinh level {level}: {estimate!r} (change {error:.1e}, {evaluations} evaluations)")
            if level >= MIN_LEVEL and error <= tol:
                break
        previous = estimate
    if error > tol:
        logger.warning(f"exp-sinh stopped at level {level} with error estimate {error:.1e} above {tol:.1e}")
    return QuadratureResult(NumericValue(estimate, error), level, evaluations)
