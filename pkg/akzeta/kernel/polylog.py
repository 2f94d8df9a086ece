"""Polylogarithms Li_k(x) for integer k and real x < 1.

The mixed-index integrands need Li_k at ``1 - e^t`` (large negative arguments)
and at ``1 - e^{-t}`` (arguments approaching 1). Both are available as functions
of t directly, so no precision is lost forming the argument.

Regions for k >= 2:
  * ``|x| <= 1/2``: power series.
  * ``1/2 < x <= 1``: expansion in ``mu = log x``.
  * ``-1 <= x < -1/2``: duplication ``Li_k(x) = 2^{1-k} Li_k(x^2) - Li_k(-x)``.
  * ``x < -1``: inversion to ``-1/x`` with a polynomial correction in ``log(-x)``.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np

from ..combinatorics import eulerian_poly, zeta_nonpositive
from ..errors import DomainError
from .values import EPS, NumericValue
from .zeta import zeta_int

logger = logging.getLogger(__name__)

# arguments e^t beyond this are clipped; every integrand is negligible there
MAX_EXP_ARG = 250.0
GAUSS_NODES = 40
LOG_SERIES_TERMS = 40


@lru_cache(maxsize=None)
def _eulerian_floats(e: int) -> tuple[float, ...]:
    return tuple(float(c) for c in eulerian_poly(e).coefficients)


@lru_cache(maxsize=None)
def _eta_even(j: int) -> float:
    # Dirichlet eta at 2j: (1 - 2^{1-2j}) ζ(2j)
    return (1.0 - 2.0 ** (1 - 2 * j)) * zeta_int(2 * j)


@lru_cache(maxsize=None)
def _harmonic(n: int) -> float:
    return math.fsum(1.0 / i for i in range(1, n + 1))


def _zeta_at(n: int) -> float:
    """ζ(n) for any integer n != 1."""
    return zeta_int(n) if n >= 2 else float(zeta_nonpositive(-n))


def _series(k: int, x: float) -> float:
    total = []
    term_power = x
    j = 1
    while True:
        term = term_power / j**k
        total.append(term)
        if abs(term) <= 1e-18 * abs(total[0]) or j > 2000:
            break
        j += 1
        term_power *= x
    return math.fsum(total)


def _log_series(k: int, mu: float) -> float:
    """Li_k(e^mu) for ``-log 2 <= mu <= 0`` and ``k >= 2``."""
    if mu == 0.0:
        return zeta_int(k)
    # |mu| <= log 2 keeps the tail below (log 2 / 2π)^j
    terms = []
    power = 1.0
    fact = 1.0
    for j in range(k + LOG_SERIES_TERMS):
        if j > 0:
            power *= mu
            fact *= j
        if j == k - 1:
            terms.append(power / fact * (_harmonic(k - 1) - math.log(-mu)))
        else:
            terms.append(_zeta_at(k - j) * power / fact)
    return math.fsum(terms)


def _li_unit(k: int, x: float) -> float:
    """Li_k(x) for ``k >= 2`` and ``-1 <= x <= 1``."""
    if abs(x) <= 0.5:
        return _series(k, x)
    if x > 0:
        return _log_series(k, math.log(x))
    y = -x
    return 2.0 ** (1 - k) * _li_unit(k, y * y) - _li_unit(k, y)


def _inversion(k: int, u: float) -> float:
    """Li_k(-e^u) for ``u > 0`` and ``k >= 2`` via the inversion relation."""
    inner = _li_unit(k, -math.exp(-u))
    terms = [-inner if k % 2 == 0 else inner, -(u**k) / math.factorial(k)]
    for j in range(1, k // 2 + 1):
        terms.append(-2.0 * u ** (k - 2 * j) / math.factorial(k - 2 * j) * _eta_even(j))
    return math.fsum(terms)


def _rational(k: int, x: float) -> float:
    """Li_k(x) for ``k <= 0``: ℰ_e(x) / (1 - x)^{e+1} with ``e = -k``."""
    e = -k
    coeffs = _eulerian_floats(e)
    if x >= 0:
        return math.fsum(c * x**d for d, c in enumerate(coeffs)) / (1.0 - x) ** (e + 1)
    # scaled form: sum_d c_d rho^d (1-x)^{d-e-1} with rho = x/(1-x) in (-1, 0)
    one_minus_x = 1.0 - x
    rho = x / one_minus_x
    return math.fsum(c * rho**d * one_minus_x ** (d - e - 1) for d, c in enumerate(coeffs))


def _li_float(k: int, x: float) -> float:
    if x >= 1.0:
        raise DomainError(f"polylog requires x < 1, got {x}")
    if k <= 0:
        return _rational(k, x)
    if k == 1:
        return -math.log1p(-x)
    if x >= -1.0:
        return _li_unit(k, x)
    return _inversion(k, math.log(-x))


def polylog_num(k: int, x: float) -> NumericValue:
    """Li_k(x) for integer ``k`` and real ``x < 1``.

    Raises:
        DomainError: If ``x >= 1``.
    """
    v = _li_float(k, x)
    scale = abs(v)
    if k >= 2 and x < -1.0:
        u = math.log(-x)
        scale = max(scale, u**k / math.factorial(k) + 1.0)
    return NumericValue(v, 64 * EPS * max(scale, 1e-300) * max(k, 1))


def li_at_one_minus_exp(k: int, t: float) -> float:
    """Li_k(1 - e^t) for ``t > 0``, argument in ``(-inf, 0)``."""
    t = min(t, MAX_EXP_ARG)
    if k <= 0:
        # rho = x / (1 - x) = e^{-t} - 1 and 1 - x = e^t
        e = -k
        rho = math.expm1(-t)
        return math.fsum(c * rho**d * math.exp(t * (d - e - 1)) for d, c in enumerate(_eulerian_floats(e)))
    if k == 1:
        return -t
    if t <= math.log(2.0):
        return _li_unit(k, -math.expm1(t))
    # 1 - e^t = -e^u with u = log(e^t - 1)
    return _inversion(k, t + math.log1p(-math.exp(-t)))


def li_at_one_minus_exp_neg(k: int, t: float) -> float:
    """Li_k(1 - e^{-t}) for ``t > 0``, argument in ``(0, 1)``."""
    t = min(t, MAX_EXP_ARG)
    if k <= 0:
        x = -math.expm1(-t)
        e = -k
        # (1 - x) = e^{-t}
        return math.fsum(c * x**d for d, c in enumerate(_eulerian_floats(e))) * math.exp(t * (e + 1))
    if k == 1:
        return t
    if t <= math.log(2.0):
        return _series(k, -math.expm1(-t))
    return _log_series(k, math.log1p(-math.exp(-t)))


@lru_cache(maxsize=None)
def _gauss_legendre() -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(GAUSS_NODES)


def _integrate(f, a: float, b: float, panel: float = 1.0) -> float:
    nodes, weights = _gauss_legendre()
    panels = max(1, math.ceil(abs(b - a) / panel))
    width = (b - a) / panels
    parts = []
    for p in range(panels):
        lo = a + p * width
        mid, half = lo + width / 2, width / 2
        parts.extend(float(w) * half * f(mid + half * float(x)) for x, w in zip(nodes, weights, strict=True))
    return math.fsum(parts)


def polylog_quadrature(k: int, x: float, anchor: float = -0.5) -> float:
    """Li_k(x) for ``x < 0`` by iterated Gauss–Legendre quadrature.

    Uses ``d/dv Li_k(-e^v) = Li_{k-1}(-e^v)`` from the small-argument anchor,
    where the power series is used; Li_1 is the closed logarithm. Independent of
    the inversion relation, so it serves as its check.
    """
    if x >= 0:
        raise DomainError(f"polylog_quadrature requires x < 0, got {x}")
    if k <= 1:
        return _li_float(k, x)
    v0, v1 = math.log(-anchor), math.log(-x)
    return _series(k, anchor) + _integrate(lambda v: polylog_quadrature(k - 1, -math.exp(v), anchor), v0, v1)


def validate_inversion(
    ks: tuple[int, ...] = (1, 2, 3), xs: tuple[float, ...] = (-10.0, -2.0), tol: float = 1e-9
) -> list[tuple[int, float, float, float, bool]]:
    """Compare the inversion-based evaluation with the quadrature oracle.

    Returns:
        ``(k, x, inversion value, oracle value, agrees)`` for every grid point.
    """
    out = []
    for k in ks:
        for x in xs:
            direct = _li_float(k, x)
            oracle = polylog_quadrature(k, x)
            ok = abs(direct - oracle) <= tol
            if not ok:
                logger.warning(f"polylog inversion disagrees with quadrature at k={k}, x={x}: {direct} vs {oracle}")
            out.append((k, x, direct, oracle, ok))
    return out
