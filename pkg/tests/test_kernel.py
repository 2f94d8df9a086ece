from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest

from akzeta.errors import DomainError
from akzeta.kernel import (
    HurwitzStarArgs,
    NumericValue,
    ZetaMethod,
    exp_sinh,
    gamma_real,
    hurwitz_num,
    mhzsv_num,
    mzsv_num,
    mzv_num,
    polylog_num,
    polylog_quadrature,
    validate_inversion,
    zeta_num,
)
from akzeta.kernel.multizeta import star_merges, star_value, strict_value
from akzeta.kernel.polylog import li_at_one_minus_exp, li_at_one_minus_exp_neg

Z2 = float(mpmath.zeta(2))
Z3 = float(mpmath.zeta(3))


def test_numeric_value_arithmetic_propagates_errors() -> None:
    a = NumericValue(1.0, 1e-10)
    b = NumericValue(2.0, 2e-10)
    s = a + b
    assert s.value == 3.0
    assert s.abs_error >= 3e-10
    p = a * b
    assert p.value == 2.0
    assert p.abs_error >= 4e-10
    assert (1 - a).value == 0.0
    assert (a / 4).value == 0.25
    assert NumericValue.exact(Fraction(1, 3)).agrees_with(Fraction(1, 3))
    assert NumericValue.total([a, b, -a]).value == 2.0


def test_numeric_value_division_by_uncertain_zero() -> None:
    with pytest.raises(ZeroDivisionError):
        NumericValue(1.0) / NumericValue(1e-12, 1e-11)


def test_agrees_with_uses_both_error_bars() -> None:
    a = NumericValue(1.0, 1e-6)
    assert a.agrees_with(NumericValue(1.0 + 1.5e-6, 1e-6))
    assert not a.agrees_with(1.0 + 3e-6)
    assert a.agrees_with(1.0 + 3e-6, tolerance=2.5e-6)


def test_gamma_real() -> None:
    assert gamma_real(5).value == 24.0
    assert gamma_real(0.5).value == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    with pytest.raises(DomainError):
        gamma_real(0)


def test_gamma_real_near_float_overflow() -> None:
    assert gamma_real(171).value == pytest.approx(float(math.factorial(170)), rel=1e-15)
    assert math.isfinite(gamma_real(171.5).value)
    for x in (172, 200, 171.7):
        with pytest.raises(DomainError, match="overflows"):
            gamma_real(x)


def test_zeta_and_hurwitz() -> None:
    assert zeta_num(2).value == pytest.approx(Z2, abs=1e-14)
    assert zeta_num(3).value == pytest.approx(Z3, abs=1e-14)
    assert zeta_num(1.5).value == pytest.approx(float(mpmath.zeta(1.5)), abs=1e-12)
    assert hurwitz_num(2, 0.5).value == pytest.approx(3 * Z2, abs=1e-13)
    assert hurwitz_num(3, Fraction(5, 2)).value == pytest.approx(float(mpmath.zeta(3, 2.5)), abs=1e-14)
    with pytest.raises(DomainError):
        zeta_num(1)
    with pytest.raises(DomainError):
        hurwitz_num(2, 0)


@pytest.mark.parametrize("k", [2, 3, 5])
@pytest.mark.parametrize("x", [-50.0, -3.0, -0.9, -0.3, 0.4, 0.7, 0.99])
def test_polylog_matches_mpmath(k: int, x: float) -> None:
    expected = float(mpmath.polylog(k, x))
    assert polylog_num(k, x).value == pytest.approx(expected, rel=1e-11, abs=1e-13)


def test_polylog_rational_and_log_orders() -> None:
    assert polylog_num(-2, 0.5).value == pytest.approx(6.0)
    assert polylog_num(0, -3.0).value == pytest.approx(-0.75)
    assert polylog_num(1, 0.5).value == pytest.approx(math.log(2))
    with pytest.raises(DomainError):
        polylog_num(2, 1.0)


def _li_oracle(k: int, x: mpmath.mpf) -> float:
    # closed rational forms for k <= 0, mpmath for k >= 1
    if k == 0:
        return float(x / (1 - x))
    if k == -2:
        return float(x * (1 + x) / (1 - x) ** 3)
    return float(mpmath.polylog(k, x))


@pytest.mark.parametrize("t", [0.3, 2.0, 10.0])
def test_polylog_at_exponential_arguments(t: float) -> None:
    with mpmath.workdps(30):
        below_arg = 1 - mpmath.exp(t)
        inside_arg = 1 - mpmath.exp(-t)
        for k in (-2, 0, 1, 2, 4):
            below = _li_oracle(k, below_arg)
            inside = _li_oracle(k, inside_arg)
            assert li_at_one_minus_exp(k, t) == pytest.approx(below, rel=1e-11, abs=1e-13)
            assert li_at_one_minus_exp_neg(k, t) == pytest.approx(inside, rel=1e-11, abs=1e-13)


def test_inversion_agrees_with_quadrature_oracle() -> None:
    rows = validate_inversion()
    assert rows
    assert all(ok for *_, ok in rows)
    assert polylog_quadrature(2, -5.0) == pytest.approx(float(mpmath.polylog(2, -5)), abs=1e-9)


def test_exp_sinh_integrates_gamma_kernels() -> None:
    result = exp_sinh(lambda t: math.exp(-t))
    assert result.value.value == pytest.approx(1.0, abs=1e-10)
    assert result.evaluations > 0
    root = exp_sinh(lambda t: t**-0.5 * math.exp(-t))
    assert root.value.value == pytest.approx(math.sqrt(math.pi), abs=1e-8)


def test_hurwitz_star_args_validation() -> None:
    with pytest.raises(DomainError):
        HurwitzStarArgs.uniform((2, 1))
    with pytest.raises(DomainError):
        HurwitzStarArgs((2,), (Fraction(0),))
    with pytest.raises(DomainError):
        HurwitzStarArgs((1, 2), (Fraction(1),))
    assert HurwitzStarArgs.uniform((1, 2), 2).common_integer_shift() == 2
    assert HurwitzStarArgs((1, 2), (Fraction(1, 2), Fraction(1, 2))).common_integer_shift() is None
    assert HurwitzStarArgs((), ()).depth == 0


def test_star_merges_enumerates_every_comma_choice() -> None:
    assert sorted(star_merges((1, 2, 3))) == [(1, 2, 3), (1, 5), (3, 3), (6,)]
    assert list(star_merges(())) == [()]


@pytest.mark.parametrize("method", list(ZetaMethod))
def test_mixed_star_identities(method: ZetaMethod) -> None:
    assert mzsv_num((1, 2), method=method).value == pytest.approx(2 * Z3, abs=1e-8)
    assert mzv_num((1, 2), method=method).value == pytest.approx(Z3, abs=1e-8)
    shifted = mhzsv_num(HurwitzStarArgs.uniform((1, 2), 2), method=method)
    assert shifted.value == pytest.approx(2 * Z3 - Z2, abs=1e-7)


def test_depth_two_strict_value_against_closed_form() -> None:
    # ζ(2,2) = (ζ(2)^2 - ζ(4)) / 2
    expected = (Z2**2 - float(mpmath.zeta(4))) / 2
    assert strict_value((2, 2)).value == pytest.approx(expected, abs=1e-12)
    assert star_value((2, 2)).value == pytest.approx(expected + float(mpmath.zeta(4)), abs=1e-12)


def test_non_integer_shift_uses_direct_route() -> None:
    value = mhzsv_num(HurwitzStarArgs.uniform((2,), Fraction(1, 2)), method=ZetaMethod.HOLDER)
    assert value.value == pytest.approx(3 * Z2, abs=1e-9)


def test_empty_argument_is_one() -> None:
    assert mhzsv_num(HurwitzStarArgs((), ())).value == 1.0


def test_divergent_exponents_raise() -> None:
    with pytest.raises(DomainError):
        mzv_num((2, 1))
    with pytest.raises(DomainError):
        mzsv_num((0, 2))
