"""Values at positive integers s = m + 1 as finite sums of (Hurwitz) multiple zeta values.

Every sum runs over weak compositions of m. The η(k,-n) and ξ̃(k,-n) formulas
share one building block, the star block

    star_block(p, β, m) = sum_{a_1+...+a_p = m} (a_p + 1) β^{-(a_1+1)}
                          ζ*(a_2+1, ..., a_{p-1}+1, a_p+2; {β}^{p-1}),

which for ``p = 1`` reduces to ``(m + 1) β^{-(m+2)}``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .coefficients import a_coeff, aprime_coeff, d_coeff, e_coeff
from .combinatorics import binomial
from .errors import DomainError, EtaAdmissibilityError, XiAdmissibilityError, XiTildeAdmissibilityError
from .integrals import SpecialFunctionRequest, SpecialKind
from .kernel.multizeta import star_value, strict_value
from .kernel.values import NumericValue
from .polybernoulli import poly_bernoulli_B

logger = logging.getLogger(__name__)

Composition = tuple[int, ...]


@lru_cache(maxsize=None)
def compositions(m: int, parts: int) -> tuple[Composition, ...]:
    """Weak compositions of ``m`` into ``parts`` parts.

    Ordered by the first part descending, then recursively by the rest, so
    ``compositions(1, 2)`` is ``((1, 0), (0, 1))``. There are
    ``C(m + parts - 1, parts - 1)`` of them.
    """
    if parts <= 0:
        return ((),) if m == 0 else ()
    if parts == 1:
        return ((m,),)
    out: list[Composition] = []
    for first in range(m, -1, -1):
        out.extend((first, *rest) for rest in compositions(m - first, parts - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def star_block(p: int, beta: int, m: int) -> NumericValue:
    """Depth-p composition sum of Hurwitz zeta-star values at shift β (see module docstring)."""
    if p == 1:
        return NumericValue.exact(Fraction(m + 1, beta ** (m + 2)))
    terms = []
    for a in compositions(m, p):
        exps = tuple(x + 1 for x in a[1:-1]) + (a[-1] + 2,)
        weight = Fraction(a[-1] + 1, beta ** (a[0] + 1))
        terms.append(star_value(exps, beta) * weight)
    return NumericValue.total(terms)


@lru_cache(maxsize=None)
def depth_one_family(kind: Literal["xi", "eta"], r: int, k: int, m: int) -> NumericValue:
    """ξ({1}^{r-1},k;m+1) or η({1}^{r-1},k;m+1) as a composition sum.

    ``sum_{a_1+...+a_k=m} C(a_k + r, r) ζ(a_1+1, ..., a_{k-1}+1, a_k+r+1)`` for ξ;
    for η the values are ζ* and the sum carries the sign ``(-1)^{r-1}``.
    """
    value_of = strict_value if kind == "xi" else star_value
    terms = []
    for a in compositions(m, k):
        exps = tuple(x + 1 for x in a[:-1]) + (a[-1] + r + 1,)
        terms.append(value_of(exps) * binomial(a[-1] + r, r))
    total = NumericValue.total(terms)
    return -total if kind == "eta" and r % 2 == 0 else total


def rhs_eta_pos_neg(k: int, n: int, m: int) -> NumericValue:
    """η(k,-n;m+1) for ``k > n``.

    ``-S_1 - S_2`` with ``S_1 = sum_{l<n} sum_{j<n-l} A_{l,j} star_block(k-l, n-l-j+1, m)``
    and ``S_2 = star_block(k-n, 1, m)``. For ``n = 0`` the first sum is empty.

    Raises:
        EtaAdmissibilityError: If ``k <= n``.
    """
    if k <= n or n < 0:
        raise EtaAdmissibilityError("the η(k,-n;m+1) formula requires k > n", f"got k={k}, n={n}")
    s1 = [
        star_block(k - ell, n - ell - j + 1, m) * a_coeff(n, ell, j) for ell in range(n) for j in range(n - ell)
    ]
    return -NumericValue.total(s1) - star_block(k - n, 1, m)


def rhs_eta_neg_pos(n: int, k: int, m: int) -> NumericValue:
    """η(-n,k;m+1) as ``sum_l D_l T_l``.

    ``T_l`` is the depth-(k-l) η family value for ``l < k``; for ``l >= k`` (only
    reachable when ``k <= n``) it is the poly-Bernoulli number ``B_{l-k}^{(m+1)}``.
    Both readings agree at ``l = k``, where the value is 1.
    """
    if k < 1 or n < 0:
        raise EtaAdmissibilityError("η(-n,k) requires k >= 1 and n >= 0", f"got n={n}, k={k}")
    terms = []
    for ell in range(n + 2):
        d = d_coeff(n, ell)
        if d == 0:
            continue
        if ell < k:
            terms.append(depth_one_family("eta", 1, k - ell, m) * d)
        else:
            terms.append(NumericValue.exact(d * poly_bernoulli_B((m + 1,), ell - k)))
    return NumericValue.total(terms)


def eta_0_1_printed_reading(m: int) -> NumericValue:
    """``-ζ(m+2) + 1``: the η(0,1;m+1) sum without the ``(a+1)`` weight, kept for comparison."""
    return 1 - star_value((m + 2,))


def rhs_eta_ones_neg(r: int, n: int, m: int, exponent_offset: int = 1) -> Fraction:
    """η({1}^{r-1},-n;m+1) exactly, for ``r > n + 1``.

    ``sum_{l=1}^{n+1} sum_{j=0}^{n} C(m+r-l, m) (-1)^{r-l} E_{l,j} (n-j+1)^{-(m+r-l+1)}``.

    Args:
        r: Depth.
        n: Negated last index.
        m: ``s - 1``.
        exponent_offset: Added to ``m + r - l`` in the exponent; 0 gives the
            alternative reading that the η(1,1,-1;1) value rules out.

    Raises:
        EtaAdmissibilityError: If ``r <= n + 1``.
    """
    if n < 0 or r <= n + 1:
        raise EtaAdmissibilityError("the η({1}^(r-1),-n;m+1) formula requires r > n+1", f"got r={r}, n={n}")
    total = Fraction(0)
    for ell in range(1, n + 2):
        outer = binomial(m + r - ell, m) * (-1) ** (r - ell)
        for j in range(n + 1):
            e = e_coeff(n, ell, j)
            if e:
                total += outer * e / Fraction(n - j + 1) ** (m + r - ell + exponent_offset)
    return total


def rhs_xi_neg_pos(n: int, k: int, m: int) -> NumericValue:
    """ξ(-n,k;m+1) = ``sum_{l=0}^{n+1} D_l ξ(k-l;m+1)`` with the ξ family at depth k-l.

    Raises:
        XiAdmissibilityError: If ``k <= n + 1``.
    """
    if n < 0 or k <= n + 1:
        raise XiAdmissibilityError("ξ(-n,k) requires k > n+1", f"got n={n}, k={k}")
    terms = [depth_one_family("xi", 1, k - ell, m) * d_coeff(n, ell) for ell in range(n + 2) if d_coeff(n, ell)]
    return NumericValue.total(terms)


def rhs_xitilde_pos_neg(k: int, n: int, m: int, base_offset: int = 0) -> NumericValue:
    """ξ̃(k,-n;m+1) for ``k < n`` as minus the sum of three parts.

    * ``sum_{l<=k-2} sum_{j<=n-l-1} A′_{l,j} star_block(k-l, n-l-j, m)``
    * ``sum_{j<=n-k} A′_{k-1,j} (m+1) / (n-k-j+1)^{m+2}``
    * ``sum_{j<=n-k-1} A′_{k,j} ((n-k-j)^{-(m+1)} - (n-k-j+1)^{-(m+1)})``

    Args:
        base_offset: Added to the shift ``n-l-j`` of the first part; 1 gives the
            alternative reading that the ξ̃(2,-3;1) value rules out.

    Raises:
        XiTildeAdmissibilityError: If ``k >= n``.
    """
    if k < 1 or k >= n:
        raise XiTildeAdmissibilityError("ξ̃(k,-n) requires 1 <= k < n", f"got k={k}, n={n}")
    first = [
        star_block(k - ell, n - ell - j + base_offset, m) * aprime_coeff(n, k, ell, j)
        for ell in range(k - 1)
        for j in range(n - ell)
    ]
    second = sum(
        (aprime_coeff(n, k, k - 1, j) * Fraction(m + 1, (n - k - j + 1) ** (m + 2)) for j in range(n - k + 1)),
        Fraction(0),
    )
    third = sum(
        (
            aprime_coeff(n, k, k, j) * (Fraction(1, (n - k - j) ** (m + 1)) - Fraction(1, (n - k - j + 1) ** (m + 1)))
            for j in range(n - k)
        ),
        Fraction(0),
    )
    return -NumericValue.total(first) - NumericValue.exact(second + third)


def theorem_eval(request: SpecialFunctionRequest) -> NumericValue | Fraction:
    """Evaluate a request at a positive integer ``s`` through its theorem sum.

    Raises:
        DomainError: If ``s`` is not a positive integer.
        AdmissibilityError: If the index lies outside the theorem's range (e.g. η(k,-n) with ``k <= n``).
    """
    s = float(request.s)
    if not s.is_integer() or s < 1:
        raise DomainError(f"theorem sums need a positive integer s, got s={request.s}")
    m = int(s) - 1
    p = request.parameters
    match request.kind:
        case SpecialKind.ETA_POS_NEG:
            return rhs_eta_pos_neg(p[0], p[1], m)
        case SpecialKind.ETA_NEG_POS:
            return rhs_eta_neg_pos(p[0], p[1], m)
        case SpecialKind.ETA_ONES_NEG:
            return rhs_eta_ones_neg(p[0], p[1], m)
        case SpecialKind.XI_NEG_POS:
            return rhs_xi_neg_pos(p[0], p[1], m)
        case SpecialKind.XITILDE_POS_NEG:
            return rhs_xitilde_pos_neg(p[0], p[1], m)
        case SpecialKind.ETA_POS:
            return depth_one_family("eta", 1, p[0], m)
        case SpecialKind.XI_POS:
            return depth_one_family("xi", 1, p[0], m)
    raise DomainError(f"no theorem sum for {request.kind.value}")
