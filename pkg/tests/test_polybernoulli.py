from __future__ import annotations

from fractions import Fraction

import pytest

from akzeta.closed_forms import REGISTRY
from akzeta.coefficients import d_coeff
from akzeta.combinatorics import BernoulliConvention, bernoulli
from akzeta.polybernoulli import (
    IndexPattern,
    SignedIndex,
    kt_frakB_r2,
    li_exp_series,
    mpl_coeffs,
    poly_bernoulli_B,
    poly_bernoulli_C,
)


@pytest.mark.parametrize(
    ("text", "pattern"),
    [
        ("3", IndexPattern.POSITIVE),
        ("0", IndexPattern.NONPOSITIVE),
        ("2,-1", IndexPattern.POS_NEG),
        ("1,0", IndexPattern.POS_NEG),
        ("0,1", IndexPattern.NEG_POS),
        ("(1,1,-1)", IndexPattern.ONES_NEG),
        ("1,2", IndexPattern.ALL_POSITIVE),
        ("-1,-2", IndexPattern.ALL_NONPOSITIVE),
        ("2,-1,3", IndexPattern.MIXED),
    ],
)
def test_signed_index_patterns(text: str, pattern: IndexPattern) -> None:
    assert SignedIndex.parse(text).pattern is pattern


def test_signed_index_parse_errors() -> None:
    with pytest.raises(ValueError):
        SignedIndex.parse("a,b")
    with pytest.raises(ValueError):
        SignedIndex.parse("")
    assert str(SignedIndex.parse(" 2, -1 ")) == "(2,-1)"
    assert SignedIndex.coerce(4).entries == (4,)


def test_mpl_coeffs_depth_one_and_two() -> None:
    assert mpl_coeffs((1,), 3) == [0, 1, Fraction(1, 2), Fraction(1, 3)]
    assert mpl_coeffs((-1,), 3) == [0, 1, 2, 3]
    # Li_{1,1}(z) = log(1-z)^2 / 2
    assert mpl_coeffs((1, 1), 3) == [0, 0, Fraction(1, 2), Fraction(1, 2)]


def test_depth_one_reduces_to_bernoulli_numbers() -> None:
    for m in range(10):
        assert poly_bernoulli_B((1,), m) == bernoulli(m, BernoulliConvention.PLUS)
        assert poly_bernoulli_C((1,), m) == bernoulli(m, BernoulliConvention.MINUS)


def test_negative_index_table() -> None:
    expected = [[1, 1, 1, 1], [1, 2, 4, 8], [1, 4, 14, 46], [1, 8, 46, 230]]
    for m, row in enumerate(expected):
        for k, value in enumerate(row):
            assert poly_bernoulli_B((-k,), m) == value


@pytest.mark.parametrize("m", range(13))
def test_continuation_identities(m: int) -> None:
    assert poly_bernoulli_B((1, 0), m) == m
    assert poly_bernoulli_B((-1, 1), m) == Fraction(2) ** (m - 1) - Fraction(1, 2)
    assert poly_bernoulli_B((1, 1, -1), m) == m * (m - 1) * Fraction(2) ** (m - 3) + m * Fraction(2) ** (m - 1) - m
    assert poly_bernoulli_C((1, -2), m) == (m + 3) * (2**m - 1)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registered_closed_forms_match_generating_functions(name: str) -> None:
    form = REGISTRY[name]
    number = poly_bernoulli_B if form.continuation == "B" else poly_bernoulli_C
    for m in range(8):
        assert number(form.index, m) == form.at_nonpositive(m)


def test_duality_depth_one() -> None:
    for k in range(6):
        for m in range(6):
            assert poly_bernoulli_B((-k,), m) == poly_bernoulli_B((-m,), k)


def test_duality_depth_two_against_frak_b() -> None:
    for k1 in range(3):
        for k2 in range(3):
            for m in range(3):
                assert poly_bernoulli_B((-k1, -k2), m) == kt_frakB_r2(k1, k2, m)


def test_d_lemma_generating_function_form() -> None:
    for n in range(3):
        for k in range(1, 4):
            for m in range(5):
                expected = sum((d_coeff(n, ell) * poly_bernoulli_B((k - ell,), m) for ell in range(n + 2)), Fraction(0))
                assert poly_bernoulli_B((-n, k), m) == expected


def test_li_exp_series_valuation_equals_depth() -> None:
    for index in ((3,), (2, -1), (1, 1, -1)):
        assert li_exp_series(index, len(index) + 3).valuation == len(index)
