from __future__ import annotations

from fractions import Fraction

import pytest

from akzeta.combinatorics import BernoulliConvention, bernoulli
from akzeta.errors import SeriesError
from akzeta.series import BiTruncatedSeries, ExpSign, TruncatedSeries, substitute_one_minus_exp


def test_exp_and_one_minus_exp() -> None:
    assert TruncatedSeries.exp(1, 4).coefficients == (1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))
    g = TruncatedSeries.one_minus_exp(ExpSign.MINUS_T, 3)
    assert g.coefficients == (0, 1, Fraction(-1, 2), Fraction(1, 6))
    assert g.valuation == 1


def test_division_gives_bernoulli_numbers() -> None:
    """t / (e^t - 1) is the generating function of the minus-convention Bernoulli numbers."""
    t = TruncatedSeries.from_sequence([0, 1], 8)
    quotient = t / (TruncatedSeries.exp(1, 8) - TruncatedSeries.exp(0, 8))
    assert quotient.order == 7
    for j in range(8):
        assert quotient.egf_coefficient(j) == bernoulli(j, BernoulliConvention.MINUS)


def test_division_valuation_errors() -> None:
    g = TruncatedSeries.one_minus_exp(ExpSign.MINUS_T, 3)
    with pytest.raises(SeriesError):
        TruncatedSeries.from_sequence([1, 1], 3) / g
    with pytest.raises(SeriesError):
        g / TruncatedSeries((), 3)
    with pytest.raises(SeriesError):
        g.reciprocal()


def test_coefficients_beyond_order_are_unknown() -> None:
    s = TruncatedSeries.exp(1, 2)
    with pytest.raises(SeriesError):
        _ = s[3]
    with pytest.raises(SeriesError):
        s.truncate(5)
    with pytest.raises(SeriesError):
        TruncatedSeries((), -1)


def test_substitute_log_series_gives_t() -> None:
    """-log(1-z) at z = 1 - e^{-t} is exactly t."""
    zcoeffs = [Fraction(0)] + [Fraction(1, m) for m in range(1, 7)]
    s = substitute_one_minus_exp(zcoeffs, ExpSign.MINUS_T, 6)
    assert s.coefficients == (0, 1, 0, 0, 0, 0, 0)


def test_substitute_needs_enough_coefficients() -> None:
    with pytest.raises(SeriesError):
        substitute_one_minus_exp([0, 1], ExpSign.PLUS_T, 4)


def test_bivariate_sum_and_product() -> None:
    e = TruncatedSeries.exp(1, 4)
    both = BiTruncatedSeries.of_sum(e, (2, 2))
    assert both[1, 1] == 1
    assert both[2, 1] == Fraction(1, 2)
    only_first = both * BiTruncatedSeries.of_second(TruncatedSeries.exp(-1, 4), (2, 2))
    assert only_first[1, 0] == 1
    assert only_first[2, 0] == Fraction(1, 2)
    assert only_first[0, 1] == 0
    assert only_first[1, 1] == 0
    with pytest.raises(SeriesError):
        BiTruncatedSeries.of_sum(e, (3, 3))
