"""Coefficient families of the mixed-index polylogarithm expansions.

Polynomial families (P, Q, P′) are primary objects; the rational tables A, E and
A′ are their coefficients after rebasing to powers of ``1 - z``. Closed-form
double sums exist for P, Q, A and E and serve as independent routes.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .combinatorics import binomial, eulerian_poly, stirling1_unsigned, stirling2, zeta_nonpositive
from .errors import IndexRangeError
from .polynomial import Basis, BasisPolynomial

logger = logging.getLogger(__name__)


class Family(str, Enum):
    P = "P"
    A = "A"
    D = "D"
    Q = "Q"
    E = "E"
    PPRIME = "Pprime"
    APRIME = "Aprime"


class Route(str, Enum):
    """Which of two independent constructions to use for a coefficient."""

    CLOSED_FORM = "closed-form"
    REBASE = "rebase"


@dataclass(frozen=True)
class CoefficientTable:
    """Exact table for one family at fixed parameters.

    Entries are keyed by ``(row, column)``. For the polynomial families the row is
    the polynomial index and the column the power of z; for D the row is ``l`` and
    the column is always 0. Lookups outside the stored range read as zero.

    Attributes:
        family: Coefficient family.
        n: Main parameter.
        k: Secondary parameter for P′ and A′; None otherwise.
        entries: Mapping from ``(row, column)`` to the exact value.
    """

    family: Family
    n: int
    k: int | None = None
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def get(self, row: int, column: int = 0) -> Fraction:
        return self.entries.get((row, column), Fraction(0))

    def rows(self) -> Iterator[tuple[int, list[Fraction]]]:
        """Yield ``(row, [values by column])`` in row order."""
        by_row: dict[int, dict[int, Fraction]] = {}
        for (row, column), value in self.entries.items():
            by_row.setdefault(row, {})[column] = value
        for row in sorted(by_row):
            cols = by_row[row]
            yield row, [cols.get(c, Fraction(0)) for c in range(max(cols) + 1)]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise IndexRangeError(message)


def rebase_to_one_minus_z(p: BasisPolynomial) -> BasisPolynomial:
    """Rewrite a powers-of-z polynomial in powers of ``1 - z``."""
    if p.basis is not Basis.Z:
        raise ValueError(f"expected a powers-of-z polynomial, got basis {p.basis.value}")
    return p.rebased(Basis.ONE_MINUS_Z)


@lru_cache(maxsize=None)
def p_poly(n: int, i: int, route: Route = Route.REBASE) -> BasisPolynomial:
    """P^{(n)}_i(z), the coefficient polynomials of the Li_{k,-n} expansion for k >= n.

    The default route is ``C(n, i+1) * ℰ_{i+1}(z) / z``; ``Route.CLOSED_FORM``
    evaluates the explicit double sum instead.

    Args:
        n: ``n >= 1``.
        i: ``0 <= i <= n - 1``.
        route: Construction to use.

    Returns:
        A degree-``i`` polynomial in powers of z.

    Raises:
        IndexRangeError: If ``(n, i)`` lies outside the family's range.
    """
    _require(n >= 1 and 0 <= i <= n - 1, f"P^({n})_{i} requires n >= 1 and 0 <= i <= n-1")
    if route is Route.REBASE:
        return eulerian_poly(i + 1).divided_by_z() * binomial(n, i + 1)
    coeffs = [Fraction(0)] * (i + 1)
    for j in range(i + 1):
        acc = 0
        for ell in range(j + 2):
            term = binomial(i + 2, ell) * (j - ell + 1) ** (i + 1)
            acc += -term if ell % 2 else term
        coeffs[i - j] += acc
    return BasisPolynomial(tuple(coeffs)) * binomial(n, i + 1)


def d_coeff(n: int, ell: int) -> Fraction:
    """D^{(n)}_l, the Faulhaber weights with ``sum_{m1 < m2} m1^n = sum_l D_l m2^l``.

    Raises:
        IndexRangeError: If ``ell`` lies outside ``[0, n + 1]``.
    """
    _require(n >= 0 and 0 <= ell <= n + 1, f"D^({n})_{ell} requires 0 <= ell <= n+1")
    if n == 0:
        return Fraction(-1) if ell == 0 else Fraction(1)
    if ell == 0:
        return Fraction(0)
    if ell == n + 1:
        return Fraction(1, n + 1)
    sign = -1 if (n - ell) % 2 else 1
    return sign * binomial(n, ell) * zeta_nonpositive(n - ell)


def a_coeff(n: int, ell: int, j: int, route: Route = Route.REBASE) -> Fraction:
    """A^{(n)}_{l,j}: coefficient ``j`` of P^{(n)}_{n-l-1} in powers of ``1 - z``.

    Raises:
        IndexRangeError: Outside ``0 <= ell <= n-1``, ``0 <= j <= n-ell-1``.
    """
    _require(n >= 1 and 0 <= ell <= n - 1 and 0 <= j <= n - ell - 1, f"A^({n})_({ell},{j}) out of range")
    if route is Route.REBASE:
        return rebase_to_one_minus_z(p_poly(n, n - ell - 1)).coefficient(j)
    total = 0
    for b in range(n - ell - j):
        for d in range(b + 2):
            term = binomial(n - ell + 1, d) * binomial(n - ell - b - 1, j) * (b - d + 1) ** (n - ell)
            total += -term if (d + j) % 2 else term
    return Fraction(binomial(n, ell) * total)


@lru_cache(maxsize=None)
def q_poly(n: int, i: int, route: Route = Route.REBASE) -> BasisPolynomial:
    """Q^{(n)}_i(z), the coefficient polynomials of the Li_{1,...,1,-n} expansion.

    The default route expands ``sum_k z^{k-1} (1-z)^{n-k+1} S2(n+1,k) s1(k,i)``
    by polynomial arithmetic; ``Route.CLOSED_FORM`` uses the binomially expanded
    double sum.

    Raises:
        IndexRangeError: Outside ``n >= 0``, ``1 <= i <= n + 1``.
    """
    _require(n >= 0 and 1 <= i <= n + 1, f"Q^({n})_{i} requires 1 <= i <= n+1")
    if route is Route.REBASE:
        one_minus_z = BasisPolynomial.of(1, -1)
        total = BasisPolynomial()
        for k in range(i, n + 2):
            weight = stirling2(n + 1, k) * stirling1_unsigned(k, i)
            if weight == 0:
                continue
            term = BasisPolynomial.monomial(k - 1, weight)
            for _ in range(n - k + 1):
                term = term * one_minus_z
            total = total + term
        return total
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(i, n + 2):
        weight = stirling2(n + 1, k) * stirling1_unsigned(k, i)
        for ell in range(n - k + 2):
            term = weight * binomial(n - k + 1, ell)
            coeffs[k + ell - 1] += -term if ell % 2 else term
    return BasisPolynomial(tuple(coeffs))


def e_coeff(n: int, ell: int, j: int, route: Route = Route.REBASE) -> Fraction:
    """E^{(n)}_{l,j}: coefficient ``j`` of Q^{(n)}_l in powers of ``1 - z``.

    Entries beyond the polynomial's degree are zero.

    Raises:
        IndexRangeError: Outside ``1 <= ell <= n + 1``, ``0 <= j <= n``.
    """
    _require(n >= 0 and 1 <= ell <= n + 1 and 0 <= j <= n, f"E^({n})_({ell},{j}) out of range")
    if route is Route.REBASE:
        return rebase_to_one_minus_z(q_poly(n, ell)).coefficient(j)
    total = 0
    for big_m in range(j + 1, n + 2):
        for k in range(ell, big_m + 1):
            term = (
                stirling2(n + 1, k)
                * stirling1_unsigned(k, ell)
                * binomial(n - k + 1, big_m - k)
                * binomial(big_m - 1, j)
            )
            total += -term if (big_m - k + j) % 2 else term
    return Fraction(total)


def pprime_rows(n: int, k: int) -> tuple[int, ...]:
    """Indices ``i`` of P′^{(n)}_i that the k < n expansion uses, in increasing order."""
    return tuple(sorted({n - m - 1 for m in range(k)} | {n - k - 1}))


@lru_cache(maxsize=None)
def pprime_poly(n: int, k: int, i: int) -> BasisPolynomial:
    """P′^{(n)}_i(z) for the Li_{k,-n} expansion with ``k < n``.

    For ``i = n - m - 1`` with ``0 <= m <= k - 1`` this is ``C(n, m) ℰ_{n-m}(z) / z``.
    The last row ``i = n - k - 1`` pairs with ``Li_0(z) = z / (1 - z)`` and equals
    ``sum_{j=k}^{n} C(n, j) ℰ_{n-j}(z) ℰ_{j-k}(z) / z^2``.

    Raises:
        IndexRangeError: If ``k >= n`` or ``i`` is not a row the expansion uses.
    """
    _require(1 <= k < n, f"P′^({n}) requires 1 <= k < n, got k={k}")
    _require(i in pprime_rows(n, k), f"P′^({n})_{i} is not used by the expansion with k={k}")
    if i == n - k - 1:
        total = BasisPolynomial()
        for j in range(k, n + 1):
            total = total + eulerian_poly(n - j) * eulerian_poly(j - k) * binomial(n, j)
        return total.divided_by_z(2)
    m = n - i - 1
    return eulerian_poly(n - m).divided_by_z() * binomial(n, m)


def aprime_range(n: int, k: int, ell: int) -> int:
    """Largest column ``j`` of row ``ell`` that the ξ̃ value theorem reads."""
    if ell <= k - 2:
        return n - ell - 1
    if ell == k - 1:
        return n - k
    return n - k - 1


def aprime_coeff(n: int, k: int, ell: int, j: int) -> Fraction:
    """A′^{(n)}_{l,j}: coefficient ``j`` of P′^{(n)}_{n-l-1} in powers of ``1 - z``.

    Raises:
        IndexRangeError: Outside ``0 <= ell <= k`` or the row's column range.
    """
    _require(1 <= k < n and 0 <= ell <= k, f"A′^({n})_{ell} requires 1 <= k < n and 0 <= ell <= k")
    _require(0 <= j <= aprime_range(n, k, ell), f"A′^({n})_({ell},{j}) out of range for k={k}")
    return rebase_to_one_minus_z(pprime_poly(n, k, n - ell - 1)).coefficient(j)


@lru_cache(maxsize=None)
def coefficient_table(family: Family, n: int, k: int | None = None, route: Route = Route.REBASE) -> CoefficientTable:
    """Build the full table of one family.

    Args:
        family: Which family.
        n: Main parameter.
        k: Required for P′ and A′.
        route: Construction route for A and E (and for P, Q).

    Returns:
        An immutable `CoefficientTable`.
    """
    entries: dict[tuple[int, int], Fraction] = {}
    if family in (Family.PPRIME, Family.APRIME):
        _require(k is not None, f"{family.value} tables need k")
    if family is Family.P:
        for i in range(n):
            for j, c in enumerate(p_poly(n, i, route).coefficients):
                entries[i, j] = c
    elif family is Family.A:
        for row in range(n):
            for j in range(n - row):
                entries[row, j] = a_coeff(n, row, j, route)
    elif family is Family.D:
        for row in range(n + 2):
            entries[row, 0] = d_coeff(n, row)
    elif family is Family.Q:
        for i in range(1, n + 2):
            for j, c in enumerate(q_poly(n, i, route).coefficients):
                entries[i, j] = c
    elif family is Family.E:
        for row in range(1, n + 2):
            for j in range(n + 1):
                entries[row, j] = e_coeff(n, row, j, route)
    elif family is Family.PPRIME:
        for i in pprime_rows(n, k):
            for j, c in enumerate(pprime_poly(n, k, i).coefficients):
                entries[i, j] = c
    else:
        _require(1 <= k < n, f"A′^({n}) requires 1 <= k < n, got k={k}")
        for row in range(k + 1):
            for j in range(aprime_range(n, k, row) + 1):
                entries[row, j] = aprime_coeff(n, k, row, j)
    logger.debug(f"built {family.value} table n={n} k={k}: {len(entries)} entries")
    return CoefficientTable(family, n, k, entries)
