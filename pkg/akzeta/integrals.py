"""Integral representations of the η, ξ and ξ̃ functions and their quadrature.

Every function here is ``1/Γ(s) ∫_0^∞ t^{s-1} F(t) dt`` where F is a multiple
polylogarithm at ``1 - e^{±t}`` over an exponential denominator. F is evaluated
through the decomposition lemmas, which write the mixed-index polylogarithm as
rational functions of z times single-index polylogarithms:

* ``Li_{k,-n}(z) / z = sum_l poly_l(z) (1-z)^{-(n-l+1)} Li_{k-l}(z)`` with
  ``poly_l = P_{n-l-1}`` (and 1 for ``l = n``) when ``k >= n``, and the P′ rows
  when ``k < n``;
* ``Li_{-n,k}(z) = sum_l D_l Li_{k-l}(z)``;
* ``Li_{1,...,1,-n}(z) / z = sum_i Q_i(z) (1-z)^{-(n+1)} Li_{1,...,1}(z)`` with
  ``r - i`` ones in the last factor.

On ``z = 1 - e^t`` the rational factors are evaluated as
``sum_j c_j ρ^j e^{t(j - N)}`` with ``ρ = z / (1 - z) = e^{-t} - 1``, which stays
bounded for every t.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .coefficients import d_coeff, p_poly, pprime_poly, q_poly
from .combinatorics import binomial
from .errors import (
    AdmissibilityError,
    DomainError,
    EtaAdmissibilityError,
    XiAdmissibilityError,
    XiTildeAdmissibilityError,
)
from .kernel.polylog import li_at_one_minus_exp, li_at_one_minus_exp_neg, polylog_num
from .kernel.quadrature import T_MAX, T_MIN, exp_sinh
from .kernel.values import NumericValue
from .kernel.zeta import gamma_real
from .polybernoulli import IndexPattern, SignedIndex
from .polynomial import Basis, BasisPolynomial

logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-9
# where F(0) is read off for s < 1
HEAD_POINT = 1e-12


class SpecialKind(str, Enum):
    """Which integral representation a request refers to.

    The parameter tuple of a request follows the order of the index: ``(k, n)``
    for η(k,-n) and ξ̃(k,-n), ``(n, k)`` for η(-n,k) and ξ(-n,k), ``(r, n)`` for
    η({1}^{r-1},-n), ``(k,)`` for the depth-one functions.
    """

    ETA_POS_NEG = "eta_pos_neg"
    ETA_NEG_POS = "eta_neg_pos"
    ETA_ONES_NEG = "eta_ones_neg"
    XI_NEG_POS = "xi_neg_pos"
    XITILDE_POS_NEG = "xitilde_pos_neg"
    ETA_POS = "eta_pos"
    XI_POS = "xi_pos"


_ARITY = {
    SpecialKind.ETA_POS_NEG: 2,
    SpecialKind.ETA_NEG_POS: 2,
    SpecialKind.ETA_ONES_NEG: 2,
    SpecialKind.XI_NEG_POS: 2,
    SpecialKind.XITILDE_POS_NEG: 2,
    SpecialKind.ETA_POS: 1,
    SpecialKind.XI_POS: 1,
}


def check_admissible(kind: SpecialKind, parameters: tuple[int, ...]) -> None:
    """Raise the matching `AdmissibilityError` subclass if the parameters are out of domain."""
    if len(parameters) != _ARITY[kind]:
        raise AdmissibilityError(f"{kind.value} takes {_ARITY[kind]} parameters", f"got {parameters}")
    match kind:
        case SpecialKind.ETA_POS_NEG:
            k, n = parameters
            if k < 1 or n < 0:
                raise EtaAdmissibilityError("η(k,-n) requires k >= 1 and n >= 0", f"got k={k}, n={n}")
        case SpecialKind.ETA_NEG_POS:
            n, k = parameters
            if k < 1 or n < 0:
                raise EtaAdmissibilityError("η(-n,k) requires k >= 1 and n >= 0", f"got n={n}, k={k}")
        case SpecialKind.ETA_ONES_NEG:
            r, n = parameters
            if r < 1 or n < 0:
                raise EtaAdmissibilityError("η({1}^(r-1),-n) requires r >= 1 and n >= 0", f"got r={r}, n={n}")
        case SpecialKind.XI_NEG_POS:
            n, k = parameters
            if n < 0 or k <= n + 1:
                raise XiAdmissibilityError("ξ(-n,k) requires k > n+1", f"got n={n}, k={k}")
        case SpecialKind.XITILDE_POS_NEG:
            k, n = parameters
            if k < 1 or k >= n:
                raise XiTildeAdmissibilityError("ξ̃(k,-n) requires 1 <= k < n", f"got k={k}, n={n}")
        case SpecialKind.ETA_POS | SpecialKind.XI_POS:
            (k,) = parameters
            if k < 1:
                raise AdmissibilityError("depth-one η(k) and ξ(k) require k >= 1", f"got k={k}")


@dataclass(frozen=True)
class SpecialFunctionRequest:
    """One evaluation of an integral-represented function at real ``s > 0``.

    Attributes:
        kind: Integral representation.
        parameters: Integer parameters in index order (see `SpecialKind`).
        s: Real argument.
    """

    kind: SpecialKind
    parameters: tuple[int, ...]
    s: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SpecialKind(self.kind))
        object.__setattr__(self, "parameters", tuple(int(p) for p in self.parameters))
        check_admissible(self.kind, self.parameters)
        if self.s <= 0:
            raise DomainError(f"the integral representation needs s > 0, got s={self.s}")

    @classmethod
    def from_index(cls, fn: str, index: SignedIndex | str, s: float) -> SpecialFunctionRequest:
        """Classify a function name and signed index into a request.

        Args:
            fn: ``"eta"``, ``"xi"`` or ``"xitilde"``.
            index: Signed index, e.g. ``"2,-1"``.
            s: Real argument.

        Raises:
            AdmissibilityError: If the pattern has no convergent representation.
        """
        idx = SignedIndex.parse(index) if isinstance(index, str) else index
        e = idx.entries
        pattern = idx.pattern
        if fn == "eta":
            match pattern:
                case IndexPattern.POSITIVE:
                    return cls(SpecialKind.ETA_POS, (e[0],), s)
                case IndexPattern.NONPOSITIVE:
                    return cls(SpecialKind.ETA_ONES_NEG, (1, -e[0]), s)
                case IndexPattern.POS_NEG:
                    return cls(SpecialKind.ETA_POS_NEG, (e[0], -e[1]), s)
                case IndexPattern.NEG_POS:
                    return cls(SpecialKind.ETA_NEG_POS, (-e[0], e[1]), s)
                case IndexPattern.ONES_NEG:
                    return cls(SpecialKind.ETA_ONES_NEG, (idx.depth, -e[-1]), s)
            raise EtaAdmissibilityError("η is defined here for (k), (k,-n), (-n,k) and ({1}^(r-1),-n)", f"index {idx}")
        if fn == "xi":
            match pattern:
                case IndexPattern.POSITIVE:
                    return cls(SpecialKind.XI_POS, (e[0],), s)
                case IndexPattern.NEG_POS:
                    return cls(SpecialKind.XI_NEG_POS, (-e[0], e[1]), s)
                case IndexPattern.POS_NEG:
                    raise XiAdmissibilityError("ξ(k,-n) does not converge for any s", f"index {idx}")
            raise XiAdmissibilityError("ξ is defined here for (k) and (-n,k) with k > n+1", f"index {idx}")
        if fn == "xitilde":
            match pattern:
                case IndexPattern.POS_NEG:
                    return cls(SpecialKind.XITILDE_POS_NEG, (e[0], -e[1]), s)
                case IndexPattern.NEG_POS:
                    raise XiTildeAdmissibilityError("ξ̃(-n,k) does not converge for any s", f"index {idx}")
            raise XiTildeAdmissibilityError("ξ̃ is defined here for (k,-n) with k < n", f"index {idx}")
        raise AdmissibilityError("function must be one of eta, xi, xitilde", f"got {fn!r}")

    @property
    def index(self) -> SignedIndex:
        p = self.parameters
        match self.kind:
            case SpecialKind.ETA_POS_NEG | SpecialKind.XITILDE_POS_NEG:
                return SignedIndex((p[0], -p[1]))
            case SpecialKind.ETA_NEG_POS | SpecialKind.XI_NEG_POS:
                return SignedIndex((-p[0], p[1]))
            case SpecialKind.ETA_ONES_NEG:
                return SignedIndex((1,) * (p[0] - 1) + (-p[1],))
        return SignedIndex(p)

    @property
    def label(self) -> str:
        name = {"eta": "η", "xi": "ξ", "xitilde": "ξ̃"}[self.function]
        return f"{name}({','.join(str(k) for k in self.index.entries)};{self.s:g})"

    @property
    def function(self) -> str:
        if self.kind in (SpecialKind.XI_NEG_POS, SpecialKind.XI_POS):
            return "xi"
        if self.kind is SpecialKind.XITILDE_POS_NEG:
            return "xitilde"
        return "eta"


# (z-basis coefficients, power N of 1/(1-z), polylog order)
_Term = tuple[tuple[float, ...], int, int]


def _floats(p: BasisPolynomial) -> tuple[float, ...]:
    return tuple(float(c) for c in p.rebased(Basis.Z).coefficients)


@lru_cache(maxsize=None)
def pos_neg_terms(k: int, n: int) -> tuple[_Term, ...]:
    """Terms of ``Li_{k,-n}(z) / z`` from the P (``k >= n``) or P′ (``k < n``) lemma."""
    terms: list[_Term] = []
    if k >= n:
        for ell in range(n):
            terms.append((_floats(p_poly(n, n - ell - 1)), n - ell + 1, k - ell))
        terms.append(((1.0,), 1, k - n))
    else:
        for ell in range(k + 1):
            terms.append((_floats(pprime_poly(n, k, n - ell - 1)), n - ell + 1, k - ell))
    return tuple(terms)


@lru_cache(maxsize=None)
def ones_neg_terms(r: int, n: int) -> tuple[tuple[tuple[float, ...], int], ...]:
    """``(Q_i coefficients, number of ones r - i)`` for ``i = 1 .. min(r, n + 1)``."""
    return tuple((_floats(q_poly(n, i)), r - i) for i in range(1, min(r, n + 1) + 1))


def _rational_at(coeffs: tuple[float, ...], power: int, t: float) -> float:
    # poly(z) / (1-z)^power at z = 1 - e^t
    rho = math.expm1(-t)
    return math.fsum(c * rho**j * math.exp(t * (j - power)) for j, c in enumerate(coeffs) if c)


def _eta_pos_neg(k: int, n: int, t: float, shift: int = 0) -> float:
    # shift = 1 multiplies by (1 - z), turning the η denominator into the ξ̃ one
    return math.fsum(
        _rational_at(coeffs, power - shift, t) * li_at_one_minus_exp(order, t)
        for coeffs, power, order in pos_neg_terms(k, n)
    )


def _eta_neg_pos(n: int, k: int, t: float) -> float:
    num = math.fsum(float(d_coeff(n, ell)) * li_at_one_minus_exp(k - ell, t) for ell in range(n + 2))
    return num / -math.expm1(t)


def _eta_ones_neg(r: int, n: int, t: float) -> float:
    total = []
    for coeffs, ones in ones_neg_terms(r, n):
        # Li_{1,...,1}(1 - e^t) with j ones is (-t)^j / j!
        total.append(_rational_at(coeffs, n + 1, t) * (-t) ** ones / math.factorial(ones))
    return math.fsum(total)


def _xi_neg_pos(n: int, k: int, t: float) -> float:
    num = math.fsum(float(d_coeff(n, ell)) * li_at_one_minus_exp_neg(k - ell, t) for ell in range(n + 2))
    return num / math.expm1(t)


def integrand(kind: SpecialKind, parameters: tuple[int, ...], t: float) -> float:
    """F(t) of the integral representation, without the ``t^{s-1}`` factor.

    Raises:
        AdmissibilityError: For inadmissible parameters.
        DomainError: For ``t <= 0``.
    """
    kind = SpecialKind(kind)
    check_admissible(kind, parameters)
    if t <= 0:
        raise DomainError(f"integrand needs t > 0, got {t}")
    return _integrand_fn(kind, parameters)(t)


def _integrand_fn(kind: SpecialKind, parameters: tuple[int, ...]) -> Callable[[float], float]:
    a = parameters[0]
    b = parameters[1] if len(parameters) > 1 else 0
    match kind:
        case SpecialKind.ETA_POS_NEG:
            return lambda t: _eta_pos_neg(a, b, t)
        case SpecialKind.XITILDE_POS_NEG:
            return lambda t: _eta_pos_neg(a, b, t, shift=1)
        case SpecialKind.ETA_NEG_POS:
            return lambda t: _eta_neg_pos(a, b, t)
        case SpecialKind.ETA_ONES_NEG:
            return lambda t: _eta_ones_neg(a, b, t)
        case SpecialKind.XI_NEG_POS:
            return lambda t: _xi_neg_pos(a, b, t)
        case SpecialKind.ETA_POS:
            return lambda t: li_at_one_minus_exp(a, t) / -math.expm1(t)
        case SpecialKind.XI_POS:
            return lambda t: li_at_one_minus_exp_neg(a, t) / math.expm1(t)
    raise AdmissibilityError(f"unknown kind {kind!r}")


def _peel_head(f: Callable[[float], float], s: float) -> tuple[Callable[[float], float], NumericValue]:
    # 1/Γ(s) ∫ t^{s-1} c e^{-t} dt = c; with c ≈ F(0) the remainder vanishes like
    # t^s at 0, so almost none of it lies below the quadrature's lower cut
    at_zero = f(HEAD_POINT)
    # F(0) - F(h) ≈ 2 (F(h/2) - F(h)) for smooth F
    drift = 2.0 * abs(f(HEAD_POINT / 2) - at_zero)
    missed = drift * T_MIN**s / gamma_real(s + 1).value

    def weighted(t: float) -> float:
        return t ** (s - 1) * (f(t) - at_zero * math.exp(-t))

    return weighted, NumericValue(at_zero, missed)


def quad_eval(request: SpecialFunctionRequest, tol: float = DEFAULT_QUAD_TOL, max_level: int = 7) -> NumericValue:
    """Evaluate ``1/Γ(s) ∫_0^∞ t^{s-1} F(t) dt`` by double-exponential quadrature.

    For ``s < 1`` the part of the integral below the quadrature's lower cut
    ``T_MIN`` is about ``F(0) T_MIN^s / Γ(s+1)``, which is visible once s is
    small. There ``F(0) e^{-t}`` is integrated in closed form and only the
    remainder goes to the quadrature.

    Args:
        request: Admissible request.
        tol: Absolute error wanted for the integral.
        max_level: Finest quadrature level.

    Returns:
        The value with its error estimate.
    """
    f = _integrand_fn(request.kind, request.parameters)
    s = float(request.s)
    head = NumericValue(0.0)
    if s == 1.0:
        weighted = f
    elif s < 1.0:
        weighted, head = _peel_head(f, s)
    else:
        def weighted(t: float) -> float:
            return t ** (s - 1) * f(t)

    result = exp_sinh(weighted, tol=tol, max_level=max_level, t_max=T_MAX)
    value = result.value / gamma_real(request.s) + head
    logger.debug(f"{request.label} = {value} (level {result.level}, {result.evaluations} evaluations)")
    return value


def _poly_at(coeffs: tuple[float, ...], z: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def pos_neg_expansion(k: int, n: int, z: float) -> float:
    """Li_{k,-n}(z) assembled from the P or P′ decomposition, for real ``z < 1``."""
    return z * math.fsum(
        _poly_at(coeffs, z) / (1.0 - z) ** power * polylog_num(order, z).value
        for coeffs, power, order in pos_neg_terms(k, n)
    )


def binomial_pos_neg(k: int, n: int, z: float) -> float:
    """Li_{k,-n}(z) as ``sum_j C(n, j) Li_{-(n-j)}(z) Li_{k-j}(z)``.

    Independent of the P and P′ tables, so it cross-checks both of them.
    """
    return math.fsum(
        binomial(n, j) * polylog_num(-(n - j), z).value * polylog_num(k - j, z).value for j in range(n + 1)
    )


def neg_pos_expansion(n: int, k: int, z: float) -> float:
    """Li_{-n,k}(z) assembled from the D decomposition."""
    return math.fsum(float(d_coeff(n, ell)) * polylog_num(k - ell, z).value for ell in range(n + 2))


def ones_neg_expansion(r: int, n: int, z: float) -> float:
    """Li_{1,...,1,-n}(z) (``r - 1`` ones) assembled from the Q decomposition."""
    run = -math.log1p(-z)
    return z * math.fsum(
        _poly_at(coeffs, z) / (1.0 - z) ** (n + 1) * run**ones / math.factorial(ones)
        for coeffs, ones in ones_neg_terms(r, n)
    )
