from __future__ import annotations

from fractions import Fraction

import pytest

from akzeta.polynomial import Basis, BasisPolynomial


def test_trailing_zeros_are_trimmed() -> None:
    assert BasisPolynomial.of(1, 0, 0).degree == 0
    zero = BasisPolynomial.of(0, 0)
    assert zero.is_zero()
    assert zero.degree == -1
    assert str(zero) == "0"


def test_rebase_z_squared() -> None:
    """z^2 = 1 - 2(1-z) + (1-z)^2, and rebasing back returns the original."""
    p = BasisPolynomial.monomial(2)
    q = p.rebased(Basis.ONE_MINUS_Z)
    assert q == BasisPolynomial.of(1, -2, 1, basis=Basis.ONE_MINUS_Z)
    assert q.rebased(Basis.Z) == p
    assert q(Fraction(1, 3)) == Fraction(1, 9)


def test_arithmetic_and_evaluation() -> None:
    a = BasisPolynomial.of(1, 1)
    b = BasisPolynomial.of(1, -1)
    assert a * b == BasisPolynomial.of(1, 0, -1)
    assert a - b == BasisPolynomial.of(0, 2)
    assert 3 * a == BasisPolynomial.of(3, 3)
    assert a(2) == 3
    assert a(0.5) == pytest.approx(1.5)


def test_mixing_bases_raises() -> None:
    a = BasisPolynomial.of(1, 1)
    b = BasisPolynomial.of(1, 1, basis=Basis.ONE_MINUS_Z)
    with pytest.raises(ValueError):
        _ = a + b


def test_divided_by_z() -> None:
    assert BasisPolynomial.of(0, 0, 3, 1).divided_by_z(2) == BasisPolynomial.of(3, 1)
    with pytest.raises(ValueError):
        BasisPolynomial.of(1, 1).divided_by_z()


def test_str_formatting() -> None:
    assert str(BasisPolynomial.of(1, -2, 1)) == "1 - 2z + z^2"
    assert str(BasisPolynomial.of(0, -1)) == "-z"
    assert str(BasisPolynomial.of(0, 3, basis=Basis.ONE_MINUS_Z)) == "3(1-z)"
