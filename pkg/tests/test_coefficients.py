from __future__ import annotations

from fractions import Fraction

import pytest

from akzeta.coefficients import (
    CoefficientTable,
    Family,
    Route,
    a_coeff,
    aprime_coeff,
    coefficient_table,
    d_coeff,
    e_coeff,
    p_poly,
    pprime_poly,
    pprime_rows,
    q_poly,
)
from akzeta.errors import IndexRangeError
from akzeta.polynomial import BasisPolynomial


def test_p_polynomials_small_cases() -> None:
    assert p_poly(2, 0) == BasisPolynomial.of(2)
    assert p_poly(2, 1) == BasisPolynomial.of(1, 1)
    assert p_poly(3, 1) == BasisPolynomial.of(3, 3)
    assert p_poly(3, 2) == BasisPolynomial.of(1, 4, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_p_and_q_routes_agree(n: int) -> None:
    for i in range(n):
        assert p_poly(n, i, Route.REBASE) == p_poly(n, i, Route.CLOSED_FORM)
    for i in range(1, n + 2):
        assert q_poly(n, i, Route.REBASE) == q_poly(n, i, Route.CLOSED_FORM)


@pytest.mark.parametrize("n", range(1, 6))
def test_a_and_e_routes_agree(n: int) -> None:
    for ell in range(n):
        for j in range(n - ell):
            assert a_coeff(n, ell, j, Route.REBASE) == a_coeff(n, ell, j, Route.CLOSED_FORM)
    for ell in range(1, n + 2):
        for j in range(n + 1):
            assert e_coeff(n, ell, j, Route.REBASE) == e_coeff(n, ell, j, Route.CLOSED_FORM)


def test_printed_small_tables() -> None:
    assert [d_coeff(0, ell) for ell in range(2)] == [-1, 1]
    assert [d_coeff(1, ell) for ell in range(3)] == [0, Fraction(-1, 2), Fraction(1, 2)]
    assert a_coeff(1, 0, 0) == 1
    assert [[e_coeff(1, ell, j) for j in range(2)] for ell in (1, 2)] == [[1, 0], [1, -1]]
    assert [aprime_coeff(2, 1, 0, j) for j in range(2)] == [2, -1]
    assert aprime_coeff(2, 1, 1, 0) == 3


def test_printed_aprime_four() -> None:
    expected = {0: (24, -36, 14, -1), 1: (24, -24, 4), 2: (12, -6), 3: (5,)}
    table = coefficient_table(Family.APRIME, 4, 3)
    for ell, row in expected.items():
        for j, value in enumerate(row):
            assert aprime_coeff(4, 3, ell, j) == value
            assert table.get(ell, j) == value


@pytest.mark.parametrize("n", range(13))
def test_d_row_sums_vanish(n: int) -> None:
    assert sum(d_coeff(n, ell) for ell in range(n + 2)) == 0


def test_d_coefficients_reproduce_power_sums() -> None:
    """sum_{m1 < m2} m1^n equals sum_l D_l m2^l."""
    for n in range(6):
        for m2 in range(1, 8):
            lhs = sum(m1**n for m1 in range(1, m2))
            assert sum(d_coeff(n, ell) * m2**ell for ell in range(n + 2)) == lhs


def test_pprime_last_row_is_constant() -> None:
    """The row paired with Li_0 is divided by z^2, so these are constants."""
    assert pprime_rows(2, 1) == (0, 1)
    assert pprime_poly(2, 1, 0) == BasisPolynomial.of(3)
    assert pprime_poly(4, 3, 0) == BasisPolynomial.of(5)
    assert pprime_poly(2, 1, 1) == BasisPolynomial.of(1, 1)


def test_pprime_rejects_unused_rows_and_k_at_least_n() -> None:
    assert pprime_rows(3, 1) == (1, 2)
    with pytest.raises(IndexRangeError):
        pprime_poly(3, 1, 0)
    with pytest.raises(IndexRangeError):
        pprime_poly(2, 2, 0)


def test_range_errors() -> None:
    with pytest.raises(IndexRangeError):
        d_coeff(1, 3)
    with pytest.raises(IndexRangeError):
        a_coeff(2, 0, 2)
    with pytest.raises(IndexRangeError):
        e_coeff(1, 0, 0)
    with pytest.raises(IndexRangeError):
        p_poly(0, 0)
    with pytest.raises(IndexRangeError):
        coefficient_table(Family.PPRIME, 3)


def test_coefficient_table_rows() -> None:
    table = coefficient_table(Family.D, 1)
    assert isinstance(table, CoefficientTable)
    assert list(table.rows()) == [(0, [0]), (1, [Fraction(-1, 2)]), (2, [Fraction(1, 2)])]
    assert table.get(7) == 0
    a2 = coefficient_table(Family.A, 2, route=Route.CLOSED_FORM)
    assert list(a2.rows()) == [(0, [2, -1]), (1, [2])]
