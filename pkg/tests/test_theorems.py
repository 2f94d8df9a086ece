from __future__ import annotations

from fractions import Fraction
from math import comb

import mpmath
import pytest

from akzeta.closed_forms import REGISTRY, closed_form_eval, closed_form_for
from akzeta.errors import (
    ConfigError,
    DomainError,
    EtaAdmissibilityError,
    XiAdmissibilityError,
    XiTildeAdmissibilityError,
)
from akzeta.integrals import SpecialFunctionRequest, SpecialKind, quad_eval
from akzeta.theorems import (
    compositions,
    depth_one_family,
    eta_0_1_printed_reading,
    rhs_eta_neg_pos,
    rhs_eta_ones_neg,
    rhs_eta_pos_neg,
    rhs_xi_neg_pos,
    rhs_xitilde_pos_neg,
    star_block,
    theorem_eval,
)

Z2 = float(mpmath.zeta(2))
Z3 = float(mpmath.zeta(3))


def test_composition_order_and_count() -> None:
    assert compositions(1, 2) == ((1, 0), (0, 1))
    assert compositions(0, 3) == ((0, 0, 0),)
    assert compositions(2, 0) == ()
    for m in range(5):
        for p in range(1, 5):
            assert len(compositions(m, p)) == comb(m + p - 1, p - 1)


def test_star_block_depth_one_is_exact() -> None:
    assert star_block(1, 1, 0).value == 1.0
    assert star_block(1, 2, 1).value == pytest.approx(2 / 2**3)


def test_depth_one_families() -> None:
    # ξ(1;s) = s ζ(s+1)
    assert depth_one_family("xi", 1, 1, 0).value == pytest.approx(Z2, abs=1e-12)
    assert depth_one_family("xi", 1, 1, 1).value == pytest.approx(2 * Z3, abs=1e-12)
    assert depth_one_family("eta", 1, 1, 0).value == pytest.approx(Z2, abs=1e-12)


@pytest.mark.parametrize(
    ("fn", "args", "expected"),
    [
        (rhs_eta_pos_neg, (1, 0, 0), -1.0),
        (rhs_eta_pos_neg, (2, 0, 0), -Z2),
        (rhs_eta_pos_neg, (2, 0, 1), -Z2 - 2 * Z3),
        (rhs_eta_pos_neg, (3, 0, 0), -2 * Z3),
        (rhs_eta_pos_neg, (2, 1, 0), -0.5 - Z2 / 2),
        (rhs_eta_pos_neg, (3, 1, 0), -Z2 / 2 - Z3),
        (rhs_eta_neg_pos, (0, 1, 0), 1 - Z2),
        (rhs_eta_neg_pos, (1, 3, 0), Z2 / 2 - Z3),
        (rhs_eta_neg_pos, (1, 1, 0), -0.25),
        (rhs_xi_neg_pos, (0, 2, 0), Z2 - Z3),
        (rhs_xi_neg_pos, (1, 3, 0), (Z2 - Z3) / 2),
        (rhs_xitilde_pos_neg, (1, 2, 0), -1.0),
        (rhs_xitilde_pos_neg, (2, 3, 0), -1.0),
        (rhs_xitilde_pos_neg, (3, 4, 0), -1.0),
    ],
)
def test_theorem_sums_reproduce_known_values(fn, args: tuple[int, int, int], expected: float) -> None:
    assert fn(*args).value == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("m", range(5))
def test_eta_zero_one_closed_form(m: int) -> None:
    s = m + 1
    expected = -s * float(mpmath.zeta(s + 1)) + 1
    assert rhs_eta_neg_pos(0, 1, m).value == pytest.approx(expected, abs=1e-9)
    assert closed_form_eval("eta_0_1", s).value == pytest.approx(expected, abs=1e-12)


def test_eta_zero_one_printed_reading_differs() -> None:
    gap = abs(eta_0_1_printed_reading(1).value - rhs_eta_neg_pos(0, 1, 1).value)
    assert gap > 0.05


def test_ones_neg_exact_values_and_adjudication() -> None:
    assert rhs_eta_ones_neg(3, 1, 0) == Fraction(7, 8)
    assert rhs_eta_ones_neg(2, 0, 0) == -1
    assert rhs_eta_ones_neg(3, 1, 0, exponent_offset=0) == Fraction(3, 4)
    for m in range(9):
        s = Fraction(m + 1)
        expected = (s + 1) * s / Fraction(2) ** (m + 4) - s / Fraction(2) ** (m + 2) + s
        assert rhs_eta_ones_neg(3, 1, m) == expected


def test_xitilde_base_reading_is_rejected() -> None:
    rejected = rhs_xitilde_pos_neg(2, 3, 0, base_offset=1).value
    assert abs(rejected - -1.0) > 0.05


def test_theorem_ranges() -> None:
    with pytest.raises(EtaAdmissibilityError):
        rhs_eta_pos_neg(1, 1, 0)
    with pytest.raises(EtaAdmissibilityError):
        rhs_eta_ones_neg(2, 1, 0)
    with pytest.raises(XiAdmissibilityError):
        rhs_xi_neg_pos(1, 2, 0)
    with pytest.raises(XiTildeAdmissibilityError):
        rhs_xitilde_pos_neg(2, 2, 0)


@pytest.mark.parametrize(
    ("kind", "params"),
    [
        (SpecialKind.ETA_POS_NEG, (3, 1)),
        (SpecialKind.ETA_NEG_POS, (2, 1)),
        (SpecialKind.ETA_ONES_NEG, (4, 1)),
        (SpecialKind.XI_NEG_POS, (0, 3)),
        (SpecialKind.XITILDE_POS_NEG, (2, 4)),
        (SpecialKind.ETA_POS, (2,)),
        (SpecialKind.XI_POS, (3,)),
    ],
)
@pytest.mark.parametrize("m", [0, 1])
def test_theorem_matches_quadrature(kind: SpecialKind, params: tuple[int, ...], m: int) -> None:
    request = SpecialFunctionRequest(kind, params, float(m + 1))
    theorem = theorem_eval(request)
    quad = quad_eval(request)
    assert quad.value == pytest.approx(float(theorem), abs=1e-7)


def test_theorem_eval_needs_integer_s() -> None:
    with pytest.raises(DomainError):
        theorem_eval(SpecialFunctionRequest(SpecialKind.ETA_POS_NEG, (2, 1), 1.5))


def test_closed_form_registry_lookup() -> None:
    assert closed_form_for("eta", (0, 1)) is REGISTRY["eta_0_1"]
    assert closed_form_for("xi", (0, 2)) is None
    assert closed_form_eval("xitilde_1_neg2", 1.0).value == pytest.approx(-1.0)
    assert closed_form_eval("eta_1_1_neg1", 1.0).value == pytest.approx(7 / 8)
    with pytest.raises(ConfigError, match="no closed form named 'missing'"):
        closed_form_eval("missing", 1.0)
