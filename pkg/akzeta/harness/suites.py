"""Verification suites.

Each builder returns the cases of one suite. Grid sizes are keyword arguments
so that smaller grids can be run; `build_suite` always uses the defaults.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Mapping, Sequence
from fractions import Fraction

import numpy as np

from ..closed_forms import REGISTRY, closed_form_eval
from ..coefficients import (
    Family,
    Route,
    a_coeff,
    aprime_coeff,
    coefficient_table,
    d_coeff,
    e_coeff,
    p_poly,
    pprime_poly,
    q_poly,
    rebase_to_one_minus_z,
)
from ..combinatorics import BernoulliConvention, bernoulli, binomial, eulerian_poly, stirling1_unsigned, stirling2
from ..config import SUITE_NAMES, RunConfig
from ..errors import ConfigError
from ..integrals import (
    SpecialFunctionRequest,
    SpecialKind,
    binomial_pos_neg,
    integrand,
    neg_pos_expansion,
    ones_neg_expansion,
    pos_neg_expansion,
    quad_eval,
)
from ..kernel.multizeta import HurwitzStarArgs, ZetaMethod, mhzsv_num, mzsv_num, mzv_num
from ..kernel.polylog import polylog_num, validate_inversion
from ..kernel.values import EPS, NumericValue
from ..kernel.zeta import zeta_num
from ..polybernoulli import SignedIndex, kt_frakB_r2, li_exp_series, mpl_coeffs, poly_bernoulli_B, poly_bernoulli_C
from ..polynomial import Basis, BasisPolynomial
from ..series import ExpSign, TruncatedSeries
from ..theorems import (
    depth_one_family,
    eta_0_1_printed_reading,
    rhs_eta_neg_pos,
    rhs_eta_ones_neg,
    rhs_eta_pos_neg,
    rhs_xi_neg_pos,
    rhs_xitilde_pos_neg,
)
from .cases import Case, Value

logger = logging.getLogger(__name__)

RouteFn = Callable[[RunConfig], Value]

ZERO = Fraction(0)
LEMMA_POINTS = (-0.8, -0.3, 0.4)
DERIVATIVE_POINTS = (-5.0, -1.5, -0.8, -0.5, 0.3, 0.4)
# rejected readings must miss the printed value by more than this
ADJUDICATION_GAP = 0.05
FAULHABER_UPTO = 12
ROUND_TRIP_SEED = 20240
TAIL_T = 40.0


# -- small builders ------------------------------------------------------------


def _const(v: Value) -> RouteFn:
    return lambda _cfg: v


def _quad(kind: SpecialKind, params: tuple[int, ...], s: float) -> RouteFn:
    request = SpecialFunctionRequest(kind, params, s)
    return lambda cfg: quad_eval(request, tol=cfg.quad_tol, max_level=cfg.quad_max_level)


def _label(kind: SpecialKind, params: tuple[int, ...], s: float) -> str:
    return SpecialFunctionRequest(kind, params, s).label


def _gap(a: Mapping[tuple[int, int], Fraction], b: Mapping[tuple[int, int], Fraction]) -> Fraction:
    return sum((abs(a.get(key, ZERO) - b.get(key, ZERO)) for key in set(a) | set(b)), ZERO)


def _seq_gap(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((abs(x - y) for x, y in zip(a, b, strict=True)), ZERO)


def _zero_case(case_id: str, description: str, route: str, gap: Callable[[], Fraction]) -> Case:
    return Case(case_id, description, route, "exact zero", lambda _cfg: gap(), _const(ZERO))


def _indicator(case_id: str, description: str, route: str, gap: Callable[[], float]) -> Case:
    # passes when the rejected reading misses by more than ADJUDICATION_GAP
    return Case(
        case_id,
        description,
        route,
        "indicator",
        lambda _cfg: Fraction(int(gap() > ADJUDICATION_GAP)),
        _const(Fraction(1)),
    )


def _params(params: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in params)


# -- exact z-series of the decomposition lemmas ----------------------------------


def _series(coeffs: Sequence[Fraction | int], order: int) -> TruncatedSeries:
    return TruncatedSeries.from_sequence(list(coeffs)[: order + 1], order)


def _poly_series(p: BasisPolynomial, order: int) -> TruncatedSeries:
    return _series(p.rebased(Basis.Z).coefficients, order)


def _inverse_power(power: int, order: int) -> TruncatedSeries:
    """``(1 - z)^{-power}``."""
    return _series([binomial(power - 1 + i, i) for i in range(order + 1)], order)


def _li_series(index: tuple[int, ...], order: int) -> TruncatedSeries:
    if not index:
        return _series([1], order)
    return _series(mpl_coeffs(index, order), order)


def pos_neg_series(k: int, n: int, order: int) -> TruncatedSeries:
    """Li_{k,-n}(z) rebuilt exactly from the P (``k >= n``) or P′ (``k < n``) tables."""
    if k >= n:
        rows = [(p_poly(n, n - ell - 1), n - ell + 1, k - ell) for ell in range(n)]
        rows.append((BasisPolynomial.of(1), 1, k - n))
    else:
        rows = [(pprime_poly(n, k, n - ell - 1), n - ell + 1, k - ell) for ell in range(k + 1)]
    z = _series([0, 1], order)
    total = _series([], order)
    for poly, power, li_order in rows:
        total = total + z * _poly_series(poly, order) * _inverse_power(power, order) * _li_series((li_order,), order)
    return total


def neg_pos_series(n: int, k: int, order: int) -> TruncatedSeries:
    """Li_{-n,k}(z) rebuilt from the D weights."""
    total = _series([], order)
    for ell in range(n + 2):
        total = total + _li_series((k - ell,), order) * d_coeff(n, ell)
    return total


def ones_neg_series(r: int, n: int, order: int) -> TruncatedSeries:
    """Li_{1,...,1,-n}(z) (``r - 1`` ones) rebuilt from the Q polynomials."""
    z = _series([0, 1], order)
    total = _series([], order)
    for i in range(1, min(r, n + 1) + 1):
        total = total + z * _poly_series(q_poly(n, i), order) * _inverse_power(n + 1, order) * _li_series(
            (1,) * (r - i), order
        )
    return total


def _degree_for(z: float, growth: int, floor: int) -> int:
    # smallest degree whose term bound m^growth |z|^m falls below 1e-13
    m = max(floor, 1)
    while m**growth * abs(z) ** m > 1e-13:
        m += 1
    return m


def truncated_li(index: tuple[int, ...], z: float, degree: int) -> NumericValue:
    """Li_index(z) by its power series through ``z**degree``, for ``|z| < 1``."""
    terms = [float(c) * z**m for m, c in enumerate(mpl_coeffs(index, degree))]
    return NumericValue(math.fsum(terms), 4 * EPS * math.fsum(abs(x) for x in terms))


# -- coefficients ----------------------------------------------------------------


def _table_gap(family: Family, n: int) -> Callable[[], Fraction]:
    def gap() -> Fraction:
        closed = coefficient_table(family, n, route=Route.CLOSED_FORM)
        rebased = coefficient_table(family, n, route=Route.REBASE)
        return _gap(closed.entries, rebased.entries)

    return gap


def _faulhaber_gap(n: int, upto: int) -> Callable[[], Fraction]:
    def gap() -> Fraction:
        total = ZERO
        for big_m in range(1, upto + 1):
            lhs = sum(m1**n for m1 in range(1, big_m))
            rhs = sum((d_coeff(n, ell) * big_m**ell for ell in range(n + 2)), ZERO)
            total += abs(lhs - rhs)
        return total

    return gap


def _random_round_trip_gap(degree: int, seed: int) -> Callable[[], Fraction]:
    def gap() -> Fraction:
        rng = np.random.default_rng(seed)
        nums = rng.integers(-60, 61, size=degree + 1)
        dens = rng.integers(1, 25, size=degree + 1)
        p = BasisPolynomial(tuple(Fraction(int(a), int(b)) for a, b in zip(nums, dens, strict=True)))
        w = rebase_to_one_minus_z(p)
        total = sum((abs(p(z) - w(z)) for z in (Fraction(1, 3), Fraction(-7, 5), Fraction(2))), ZERO)
        return total + _seq_gap(p.coefficients, w.rebased(Basis.Z).coefficients)

    return gap


def _round_trip_gap(n: int) -> Callable[[], Fraction]:
    def gap() -> Fraction:
        total = ZERO
        z = Fraction(1, 3)
        for i in range(n):
            p = p_poly(n, i)
            w = p.rebased(Basis.ONE_MINUS_Z)
            total += abs(p(z) - w(z))
            total += _seq_gap(p.coefficients, w.rebased(Basis.Z).coefficients)
        return total

    return gap


def _eulerian_series_gap(i: int, order: int) -> Callable[[], Fraction]:
    def gap() -> Fraction:
        rebuilt = _poly_series(eulerian_poly(i), order) * _inverse_power(i + 1, order)
        return _seq_gap(rebuilt.coefficients, mpl_coeffs((-i,), order))

    return gap


def _stirling_gap(n: int) -> Fraction:
    total = ZERO
    for m in range(n + 1):
        acc = sum((-1) ** (k - m) * stirling2(n, k) * stirling1_unsigned(k, m) for k in range(n + 1))
        total += abs(acc - (1 if m == n else 0))
    return Fraction(total)


def _bernoulli_gf(order: int) -> TruncatedSeries:
    # t / (1 - e^{-t}) generates the plus convention
    return _series([0, 1], order + 1) / TruncatedSeries.one_minus_exp(ExpSign.MINUS_T, order + 1)


def printed_coefficient_cases(prefix: str) -> list[Case]:
    """Exact comparison of computed coefficients with the printed tables."""
    printed: list[tuple[str, Callable[[], Fraction], Fraction]] = [
        ("D(0)_0", lambda: d_coeff(0, 0), Fraction(-1)),
        ("D(0)_1", lambda: d_coeff(0, 1), Fraction(1)),
        ("D(1)_0", lambda: d_coeff(1, 0), Fraction(0)),
        ("D(1)_1", lambda: d_coeff(1, 1), Fraction(-1, 2)),
        ("D(1)_2", lambda: d_coeff(1, 2), Fraction(1, 2)),
        ("A(1)_0,0", lambda: a_coeff(1, 0, 0), Fraction(1)),
        ("E(1)_1,0", lambda: e_coeff(1, 1, 0), Fraction(1)),
        ("E(1)_1,1", lambda: e_coeff(1, 1, 1), Fraction(0)),
        ("E(1)_2,0", lambda: e_coeff(1, 2, 0), Fraction(1)),
        ("E(1)_2,1", lambda: e_coeff(1, 2, 1), Fraction(-1)),
        ("A'(2)_0,0", lambda: aprime_coeff(2, 1, 0, 0), Fraction(2)),
        ("A'(2)_0,1", lambda: aprime_coeff(2, 1, 0, 1), Fraction(-1)),
        ("A'(2)_1,0", lambda: aprime_coeff(2, 1, 1, 0), Fraction(3)),
    ]
    a4 = {0: (24, -36, 14, -1), 1: (24, -24, 4), 2: (12, -6), 3: (5,)}
    for ell, row in a4.items():
        for j, value in enumerate(row):
            printed.append((f"A'(4)_{ell},{j}", lambda ell=ell, j=j: aprime_coeff(4, 3, ell, j), Fraction(value)))
    return [
        Case(
            f"{prefix}/printed/{name}",
            f"{name} equals the printed table entry",
            "table",
            "printed",
            lambda _cfg, f=f: f(),
            _const(v),
        )
        for name, f, v in printed
    ]


def coefficient_cases(
    config: RunConfig,
    max_route_n: int = 6,
    max_sum_n: int = 12,
    max_faulhaber_n: int = 8,
    max_random_degree: int = 12,
) -> list[Case]:
    cases: list[Case] = []
    for family, lo in ((Family.P, 1), (Family.A, 1), (Family.Q, 0), (Family.E, 0)):
        for n in range(lo, max_route_n + 1):
            cases.append(
                _zero_case(
                    f"coefficients/route/{family.value}/n={n:02d}",
                    f"{family.value}^({n}) closed form against the rebased Eulerian route",
                    "|closed-form - rebase|",
                    _table_gap(family, n),
                )
            )
    for n in range(max_sum_n + 1):
        cases.append(
            _zero_case(
                f"coefficients/d-row-sum/n={n:02d}",
                f"sum_l D^({n})_l = 0",
                "D row sum",
                lambda n=n: sum((d_coeff(n, ell) for ell in range(n + 2)), ZERO),
            )
        )
    for n in range(max_faulhaber_n + 1):
        cases.append(
            _zero_case(
                f"coefficients/faulhaber/n={n:02d}",
                f"sum_(m1<M) m1^{n} = sum_l D_l M^l for M <= {FAULHABER_UPTO}",
                "|power sum - D polynomial|",
                _faulhaber_gap(n, FAULHABER_UPTO),
            )
        )
    for n in range(1, max_route_n):
        cases.append(
            _zero_case(
                f"coefficients/basis-round-trip/n={n:02d}",
                f"P^({n})_i survives z -> 1-z -> z and evaluates alike in both bases",
                "|z basis - (1-z) basis|",
                _round_trip_gap(n),
            )
        )
    for degree in range(max_random_degree + 1):
        cases.append(
            _zero_case(
                f"coefficients/basis-round-trip/random/deg={degree:02d}",
                f"a seeded random rational polynomial of degree {degree} survives z -> 1-z -> z",
                "|z basis - (1-z) basis|",
                _random_round_trip_gap(degree, ROUND_TRIP_SEED + degree),
            )
        )
    for i in range(11):
        cases.append(
            Case(
                f"coefficients/eulerian-at-one/i={i:02d}",
                f"ℰ_{i}(1) = {i}!",
                "Eulerian polynomial",
                "factorial",
                lambda _cfg, i=i: eulerian_poly(i)(Fraction(1)),
                _const(Fraction(math.factorial(i))),
            )
        )
    for i in range(max_route_n + 1):
        cases.append(
            _zero_case(
                f"coefficients/eulerian-series/i={i:02d}",
                f"ℰ_{i}(z)/(1-z)^{i + 1} reproduces the z-series of Li_-{i}",
                "|Eulerian quotient - Li series|",
                _eulerian_series_gap(i, 12),
            )
        )
    gf = _bernoulli_gf(16)
    for j in range(17):
        cases.append(
            Case(
                f"coefficients/bernoulli-gf/j={j:02d}",
                f"B_{j} (plus convention) from t/(1-e^-t)",
                "recurrence",
                "generating function",
                lambda _cfg, j=j: bernoulli(j, BernoulliConvention.PLUS),
                lambda _cfg, j=j: gf.egf_coefficient(j),
            )
        )
    cases.append(
        _zero_case(
            "coefficients/bernoulli-recurrence",
            "sum_(i<=n) C(n+1,i) B_i = 0 (minus convention) for 1 <= n <= 16",
            "recurrence residual",
            lambda: sum(
                (
                    abs(sum((binomial(n + 1, i) * bernoulli(i, BernoulliConvention.MINUS) for i in range(n + 1)), ZERO))
                    for n in range(1, 17)
                ),
                ZERO,
            ),
        )
    )
    cases.append(
        _zero_case(
            "coefficients/bernoulli-sign",
            "B_j(plus) = (-1)^j B_j(minus) for j <= 16",
            "|plus - signed minus|",
            lambda: sum(
                (
                    abs(bernoulli(j, BernoulliConvention.PLUS) - (-1) ** j * bernoulli(j, BernoulliConvention.MINUS))
                    for j in range(17)
                ),
                ZERO,
            ),
        )
    )
    for n in range(1, 9):
        cases.append(
            _zero_case(
                f"coefficients/stirling-orthogonality/n={n:02d}",
                f"sum_k S(n,k) s(k,m) = δ_nm for n = {n}",
                "|S2 · signed S1 - identity|",
                lambda n=n: _stirling_gap(n),
            )
        )
    cases.extend(printed_coefficient_cases("coefficients"))
    return cases


# -- poly-Bernoulli --------------------------------------------------------------

C_B_INDICES = ((1,), (2,), (-1,), (1, -2), (2, -1), (-1, 2))
VALUATION_INDICES = ((3,), (0, 1), (-1, 1), (2, -1), (1, 1, -1), (1, 1, 1, -2))


def polybernoulli_cases(config: RunConfig, max_m: int = 12, relation_m: int = 8, lemma_m: int = 5) -> list[Case]:
    cases: list[Case] = []
    for form in REGISTRY.values():
        number = poly_bernoulli_B if form.continuation == "B" else poly_bernoulli_C
        for m in range(max_m + 1):
            cases.append(
                Case(
                    f"polybernoulli/continuation/{form.name}/m={m:02d}",
                    f"{form.continuation}_{m}^{SignedIndex(form.index)} = ({form.formula}) at s = -{m}",
                    "generating function",
                    "closed form",
                    lambda _cfg, f=number, idx=form.index, m=m: f(idx, m),
                    lambda _cfg, g=form.at_nonpositive, m=m: g(m),
                )
            )
    for index in C_B_INDICES:
        for m in range(relation_m + 1):
            cases.append(
                Case(
                    f"polybernoulli/c-from-b/{_params(index)}/m={m:02d}",
                    f"C_{m}^{SignedIndex(index)} = sum_j C({m},j) (-1)^({m}-j) B_j",
                    "C generating function",
                    "binomial transform of B",
                    lambda _cfg, index=index, m=m: poly_bernoulli_C(index, m),
                    lambda _cfg, index=index, m=m: sum(
                        (binomial(m, j) * (-1) ** (m - j) * poly_bernoulli_B(index, j) for j in range(m + 1)), ZERO
                    ),
                )
            )
    for index in VALUATION_INDICES:
        depth = len(index)
        cases.append(
            Case(
                f"polybernoulli/valuation/{_params(index)}",
                f"Li{SignedIndex(index)}(1-e^-t) vanishes to order exactly {depth} at t = 0",
                "series valuation",
                "depth",
                lambda _cfg, index=index, depth=depth: Fraction(li_exp_series(index, depth + 3).valuation or 0),
                _const(Fraction(depth)),
            )
        )
    for n in range(3):
        for k in range(1, 4):
            for label, number in (("B", poly_bernoulli_B), ("C", poly_bernoulli_C)):
                cases.append(
                    _zero_case(
                        f"polybernoulli/d-lemma/{label}/{n},{k}",
                        f"{label}_m^(-{n},{k}) = sum_l D_l {label}_m^({k}-l) for m <= {lemma_m}",
                        "|mixed index - D combination|",
                        lambda n=n, k=k, number=number: sum(
                            (
                                abs(
                                    number((-n, k), m)
                                    - sum((d_coeff(n, ell) * number((k - ell,), m) for ell in range(n + 2)), ZERO)
                                )
                                for m in range(lemma_m + 1)
                            ),
                            ZERO,
                        ),
                    )
                )
    return cases


# -- duality ---------------------------------------------------------------------


def duality_cases(config: RunConfig, depth1_max: int = 10, depth2_max: int = 4) -> list[Case]:
    cases: list[Case] = []
    for m in range(depth1_max + 1):
        for k in range(m):
            cases.append(
                Case(
                    f"duality/r1/k={k:02d},m={m:02d}",
                    f"B_{m}^(-{k}) = B_{k}^(-{m})",
                    "B_m^(-k)",
                    "B_k^(-m)",
                    lambda _cfg, k=k, m=m: poly_bernoulli_B((-k,), m),
                    lambda _cfg, k=k, m=m: poly_bernoulli_B((-m,), k),
                )
            )
    for k1 in range(depth2_max + 1):
        for k2 in range(depth2_max + 1):
            for m in range(depth2_max + 1):
                cases.append(
                    Case(
                        f"duality/r2/k1={k1},k2={k2},m={m}",
                        f"B_{m}^(-{k1},-{k2}) = 𝔅^(-{m})_({k1},{k2})",
                        "multi-poly-Bernoulli",
                        "Kaneko-Tsumura",
                        lambda _cfg, k1=k1, k2=k2, m=m: poly_bernoulli_B((-k1, -k2), m),
                        lambda _cfg, k1=k1, k2=k2, m=m: kt_frakB_r2(k1, k2, m),
                    )
                )
    return cases


# -- lemmas ----------------------------------------------------------------------

POS_NEG_PAIRS = ((1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2))
PPRIME_PAIRS = ((1, 2), (1, 3), (2, 3))
ONES_NEG_PAIRS = ((2, 0), (3, 0), (3, 1), (4, 0), (4, 1), (4, 2))


def _derivative_route(k: int, z: float) -> RouteFn:
    def value(_cfg: RunConfig) -> Value:
        h = 1e-5 * max(1.0, abs(z))
        slope = (polylog_num(k, z + h).value - polylog_num(k, z - h).value) / (2 * h)
        return NumericValue(z * slope, 1e-8 * max(1.0, abs(z * slope)))

    return value


def _inversion_route(k: int, x: float, which: int) -> RouteFn:
    return lambda _cfg: NumericValue.exact(validate_inversion((k,), (x,), tol=1e-9)[0][which])


def lemma_cases(config: RunConfig, order: int = 12, points: Sequence[float] = LEMMA_POINTS) -> list[Case]:
    cases: list[Case] = []
    for k, n in POS_NEG_PAIRS + PPRIME_PAIRS:
        table = "P" if k >= n else "P′"
        cases.append(
            _zero_case(
                f"lemmas/series/pos-neg/{k},{n}",
                f"Li_({k},-{n}) z-series through z^{order} from the {table} expansion",
                f"|{table} expansion - chain sum|",
                lambda k=k, n=n: _seq_gap(pos_neg_series(k, n, order).coefficients, mpl_coeffs((k, -n), order)),
            )
        )
    for n in range(4):
        for k in range(1, 4):
            cases.append(
                _zero_case(
                    f"lemmas/series/neg-pos/{n},{k}",
                    f"Li_(-{n},{k}) z-series through z^{order} from the D expansion",
                    "|D expansion - chain sum|",
                    lambda n=n, k=k: _seq_gap(neg_pos_series(n, k, order).coefficients, mpl_coeffs((-n, k), order)),
                )
            )
    for r in range(1, 5):
        for n in range(3):
            index = (1,) * (r - 1) + (-n,)
            cases.append(
                _zero_case(
                    f"lemmas/series/ones-neg/{r},{n}",
                    f"Li{SignedIndex(index)} z-series through z^{order} from the Q expansion",
                    "|Q expansion - chain sum|",
                    lambda r=r, n=n, index=index: _seq_gap(
                        ones_neg_series(r, n, order).coefficients, mpl_coeffs(index, order)
                    ),
                )
            )

    def direct(index: tuple[int, ...], z: float, growth: int) -> RouteFn:
        return lambda cfg: truncated_li(index, z, _degree_for(z, growth, cfg.series_cutoff))

    for z in points:
        for k, n in POS_NEG_PAIRS + PPRIME_PAIRS:
            table = "P" if k >= n else "P′"
            cases.append(
                Case(
                    f"lemmas/grid/pos-neg/{k},{n}/z={z:+.1f}",
                    f"Li_({k},-{n})({z}) from the {table} expansion",
                    f"{table} expansion",
                    "truncated chain sum",
                    lambda _cfg, k=k, n=n, z=z: NumericValue.exact(pos_neg_expansion(k, n, z)),
                    direct((k, -n), z, n + 2),
                    1e-8,
                )
            )
            cases.append(
                Case(
                    f"lemmas/grid/binomial/{k},{n}/z={z:+.1f}",
                    f"Li_({k},-{n})({z}) from the binomial product expansion",
                    "binomial expansion",
                    "truncated chain sum",
                    lambda _cfg, k=k, n=n, z=z: NumericValue.exact(binomial_pos_neg(k, n, z)),
                    direct((k, -n), z, n + 2),
                    1e-8,
                )
            )
        for n in range(3):
            for k in range(1, 4):
                cases.append(
                    Case(
                        f"lemmas/grid/neg-pos/{n},{k}/z={z:+.1f}",
                        f"Li_(-{n},{k})({z}) from the D expansion",
                        "D expansion",
                        "truncated chain sum",
                        lambda _cfg, n=n, k=k, z=z: NumericValue.exact(neg_pos_expansion(n, k, z)),
                        direct((-n, k), z, n + 2),
                        1e-8,
                    )
                )
        for r, n in ONES_NEG_PAIRS:
            index = (1,) * (r - 1) + (-n,)
            cases.append(
                Case(
                    f"lemmas/grid/ones-neg/{r},{n}/z={z:+.1f}",
                    f"Li{SignedIndex(index)}({z}) from the Q expansion",
                    "Q expansion",
                    "truncated chain sum",
                    lambda _cfg, r=r, n=n, z=z: NumericValue.exact(ones_neg_expansion(r, n, z)),
                    direct(index, z, n + r + 1),
                    1e-8,
                )
            )
        for j in range(1, 5):
            cases.append(
                Case(
                    f"lemmas/grid/run-of-ones/{j}/z={z:+.1f}",
                    f"Li_{{1}}^{j}({z}) = (-log(1-z))^{j}/{j}!",
                    "closed form",
                    "truncated chain sum",
                    lambda _cfg, j=j, z=z: NumericValue.exact((-math.log1p(-z)) ** j / math.factorial(j)),
                    direct((1,) * j, z, j + 1),
                    1e-8,
                )
            )
    for k in range(1, 5):
        for z in DERIVATIVE_POINTS:
            cases.append(
                Case(
                    f"lemmas/polylog-derivative/k={k}/z={z:+.1f}",
                    f"z d/dz Li_{k}(z) = Li_{k - 1}(z) at z = {z}",
                    "central difference",
                    "polylog",
                    _derivative_route(k, z),
                    lambda _cfg, k=k, z=z: polylog_num(k - 1, z),
                    1e-6,
                )
            )
    for k in (1, 2, 3):
        for x in (-10.0, -2.0):
            cases.append(
                Case(
                    f"lemmas/polylog-inversion/k={k}/x={x:+.1f}",
                    f"Li_{k}({x}) by inversion against iterated Gauss-Legendre quadrature",
                    "inversion",
                    "quadrature oracle",
                    _inversion_route(k, x, 2),
                    _inversion_route(k, x, 3),
                    1e-9,
                )
            )
    for a, b in ((2, 2), (2, 3), (3, 3)):
        cases.append(
            Case(
                f"lemmas/stuffle/{a},{b}",
                f"ζ({a})ζ({b}) = ζ({a},{b}) + ζ({b},{a}) + ζ({a + b})",
                "product",
                "stuffle sum",
                lambda _cfg, a=a, b=b: zeta_num(a) * zeta_num(b),
                lambda cfg, a=a, b=b: mzv_num((a, b), tol=cfg.mzv_tol)
                + mzv_num((b, a), tol=cfg.mzv_tol)
                + zeta_num(a + b),
            )
        )
    for a, b in ((1, 2), (2, 2), (1, 3), (2, 3)):
        cases.append(
            Case(
                f"lemmas/star-strict/{a},{b}",
                f"ζ*({a},{b}) = ζ({a},{b}) + ζ({a + b})",
                "direct star sum",
                "strict plus diagonal",
                lambda cfg, a=a, b=b: mzsv_num(
                    (a, b), tol=cfg.mzv_tol, method=ZetaMethod.DIRECT, cutoff=cfg.mzv_cutoff
                ),
                lambda cfg, a=a, b=b: mzv_num((a, b), tol=cfg.mzv_tol) + zeta_num(a + b),
            )
        )
    for exps in ((1, 2), (2, 2), (2, 3), (1, 1, 3), (1, 2, 2)):
        for star, fn, name in ((False, mzv_num, "ζ"), (True, mzsv_num, "ζ*")):
            cases.append(
                Case(
                    f"lemmas/mzv-routes/{'star' if star else 'strict'}/{_params(exps)}",
                    f"{name}({_params(exps)}) by the Hölder convolution and by direct summation",
                    "holder",
                    "direct",
                    lambda cfg, fn=fn, exps=exps: fn(exps, tol=cfg.mzv_tol, method=ZetaMethod.HOLDER),
                    lambda cfg, fn=fn, exps=exps: fn(
                        exps, tol=cfg.mzv_tol, method=ZetaMethod.DIRECT, cutoff=cfg.mzv_cutoff
                    ),
                )
            )
    cases.append(
        Case(
            "lemmas/hurwitz/shift-one",
            "ζ*(1,2;{1}^2) by direct Hurwitz summation equals ζ*(1,2)",
            "direct Hurwitz",
            "holder",
            lambda cfg: mhzsv_num(
                HurwitzStarArgs.uniform((1, 2), 1), tol=cfg.mzv_tol, method=ZetaMethod.DIRECT, cutoff=cfg.mzv_cutoff
            ),
            lambda cfg: mzsv_num((1, 2), tol=cfg.mzv_tol),
        )
    )
    for exps in ((1, 1, 3), (1, 2, 2)):
        for shift in (1, 2, 3):
            cases.append(
                Case(
                    f"lemmas/hurwitz/shift-{shift}/{_params(exps)}",
                    f"ζ*({_params(exps)};{{{shift}}}^3) by the Hölder route and by direct Hurwitz summation",
                    "holder",
                    "direct Hurwitz",
                    lambda cfg, exps=exps, shift=shift: mhzsv_num(
                        HurwitzStarArgs.uniform(exps, shift), tol=cfg.mzv_tol
                    ),
                    lambda cfg, exps=exps, shift=shift: mhzsv_num(
                        HurwitzStarArgs.uniform(exps, shift),
                        tol=cfg.mzv_tol,
                        method=ZetaMethod.DIRECT,
                        cutoff=cfg.mzv_cutoff,
                    ),
                )
            )
    cases.append(
        Case(
            "lemmas/hurwitz/shift-two",
            "ζ*(1,2;{2}^2) by peeling to shift 1 and by direct summation",
            "holder",
            "direct Hurwitz",
            lambda cfg: mhzsv_num(HurwitzStarArgs.uniform((1, 2), 2), tol=cfg.mzv_tol),
            lambda cfg: mhzsv_num(
                HurwitzStarArgs.uniform((1, 2), 2), tol=cfg.mzv_tol, method=ZetaMethod.DIRECT, cutoff=cfg.mzv_cutoff
            ),
        )
    )
    cases.append(
        Case(
            "lemmas/hurwitz/shift-half",
            "ζ*(2;{1/2}) = 3ζ(2)",
            "direct Hurwitz",
            "closed form",
            lambda cfg: mhzsv_num(
                HurwitzStarArgs((2,), (Fraction(1, 2),)),
                tol=cfg.mzv_tol,
                method=ZetaMethod.DIRECT,
                cutoff=cfg.mzv_cutoff,
            ),
            lambda _cfg: zeta_num(2) * 3,
        )
    )
    return cases


# -- theorems --------------------------------------------------------------------

TheoremFn = Callable[..., Value]


def _theorem_case(
    kind: SpecialKind,
    params: tuple[int, ...],
    m: int,
    rhs: TheoremFn,
    tolerance: float | None = None,
    prefix: str = "theorems",
) -> Case:
    return Case(
        f"{prefix}/{kind.value}/{_params(params)}/m={m}",
        f"{_label(kind, params, m + 1)}: theorem sum against quadrature of the integral",
        "quadrature",
        "theorem",
        _quad(kind, params, m + 1),
        lambda _cfg: rhs(*params, m),
        tolerance,
    )


# acceptance cases at s = 1 for the tail check
TAIL_REQUESTS = (
    (SpecialKind.ETA_POS_NEG, (2, 0)),
    (SpecialKind.ETA_POS_NEG, (3, 0)),
    (SpecialKind.ETA_POS_NEG, (2, 1)),
    (SpecialKind.ETA_POS_NEG, (3, 1)),
    (SpecialKind.ETA_NEG_POS, (0, 1)),
    (SpecialKind.ETA_NEG_POS, (1, 3)),
    (SpecialKind.ETA_NEG_POS, (1, 1)),
    (SpecialKind.ETA_ONES_NEG, (3, 1)),
    (SpecialKind.XI_NEG_POS, (0, 2)),
    (SpecialKind.XI_NEG_POS, (1, 3)),
    (SpecialKind.XITILDE_POS_NEG, (1, 2)),
    (SpecialKind.XITILDE_POS_NEG, (2, 3)),
    (SpecialKind.XITILDE_POS_NEG, (3, 4)),
)
CONTINUITY_REQUESTS = (
    (SpecialKind.ETA_POS_NEG, (2, 1)),
    (SpecialKind.ETA_ONES_NEG, (3, 1)),
    (SpecialKind.XI_NEG_POS, (0, 2)),
    (SpecialKind.XITILDE_POS_NEG, (1, 2)),
)


def _tail_ratio(kind: SpecialKind, params: tuple[int, ...]) -> RouteFn:
    def ratio(cfg: RunConfig) -> Value:
        total = quad_eval(SpecialFunctionRequest(kind, params, 1.0), tol=cfg.quad_tol, max_level=cfg.quad_max_level)
        return NumericValue(abs(integrand(kind, params, TAIL_T)) / abs(total.value), 0.0)

    return ratio


def _midpoint(kind: SpecialKind, params: tuple[int, ...], s: float, h: float) -> RouteFn:
    def value(cfg: RunConfig) -> Value:
        above = _quad(kind, params, s + h)(cfg)
        below = _quad(kind, params, s - h)(cfg)
        return (above + below) * 0.5

    return value


def theorem_cases(
    config: RunConfig,
    k_max: int = 4,
    m_max: int = 2,
    ones_r_max: int = 5,
    ones_m_max: int = 3,
    xi_n_max: int = 1,
) -> list[Case]:
    cases: list[Case] = []
    for k in range(1, k_max + 1):
        for n in range(k):
            for m in range(m_max + 1):
                cases.append(_theorem_case(SpecialKind.ETA_POS_NEG, (k, n), m, rhs_eta_pos_neg))
    for n in range(k_max):
        for k in range(1, k_max):
            for m in range(m_max + 1):
                cases.append(_theorem_case(SpecialKind.ETA_NEG_POS, (n, k), m, rhs_eta_neg_pos))
    for r in range(2, ones_r_max + 1):
        for n in range(r - 1):
            for m in range(ones_m_max + 1):
                cases.append(_theorem_case(SpecialKind.ETA_ONES_NEG, (r, n), m, rhs_eta_ones_neg, 1e-8))
    for n in range(xi_n_max + 1):
        for k in range(n + 2, k_max + 1):
            for m in range(m_max + 1):
                cases.append(_theorem_case(SpecialKind.XI_NEG_POS, (n, k), m, rhs_xi_neg_pos))
    for n in range(2, k_max + 1):
        for k in range(1, n):
            for m in range(m_max + 1):
                cases.append(_theorem_case(SpecialKind.XITILDE_POS_NEG, (k, n), m, rhs_xitilde_pos_neg))
    for k in range(1, k_max):
        for m in range(m_max + 1):
            for family, kind in (("eta", SpecialKind.ETA_POS), ("xi", SpecialKind.XI_POS)):
                cases.append(
                    _theorem_case(kind, (k,), m, lambda k, m, family=family: depth_one_family(family, 1, k, m))
                )
    for kind, params in TAIL_REQUESTS:
        cases.append(
            Case(
                f"theorems/tail/{kind.value}/{_params(params)}",
                f"{_label(kind, params, 1.0)}: integrand at t = {TAIL_T:g} is below 1e-12 of the value",
                "|F(40)| / |value|",
                "exact zero",
                _tail_ratio(kind, params),
                _const(ZERO),
                1e-12,
            )
        )
    for kind, params in CONTINUITY_REQUESTS:
        cases.append(
            Case(
                f"theorems/continuity/{kind.value}/{_params(params)}",
                f"{_label(kind, params, 1.5)}: mean of s = 1.5 ± 1e-3 matches the value at 1.5",
                "midpoint mean",
                "quadrature",
                _midpoint(kind, params, 1.5, 1e-3),
                _quad(kind, params, 1.5),
                1e-5,
            )
        )
    return cases


# -- printed examples ------------------------------------------------------------


def _three_routes(
    tag: str,
    kind: SpecialKind,
    params: tuple[int, ...],
    m: int,
    printed: Value,
    rhs: TheoremFn,
    closed_form: str | None = None,
) -> list[Case]:
    label = _label(kind, params, m + 1)
    cases = [
        Case(
            f"paper/{tag}/quadrature",
            f"{label} by quadrature",
            "quadrature",
            "printed",
            _quad(kind, params, m + 1),
            _const(printed),
        ),
        Case(
            f"paper/{tag}/theorem",
            f"{label} by the theorem sum",
            "theorem",
            "printed",
            lambda _cfg: rhs(*params, m),
            _const(printed),
        ),
    ]
    if closed_form is not None:
        cases.append(
            Case(
                f"paper/{tag}/closed-form",
                f"{label} by the closed form in s",
                "closed form",
                "printed",
                lambda _cfg: closed_form_eval(closed_form, m + 1),
                _const(printed),
            )
        )
    return cases


def paper_example_cases(config: RunConfig, continuation_m: int = 12) -> list[Case]:
    z2, z3 = zeta_num(2), zeta_num(3)
    half = Fraction(1, 2)
    cases: list[Case] = []

    # η(k,-n)
    cases += _three_routes("eta(2,0;1)", SpecialKind.ETA_POS_NEG, (2, 0), 0, -z2, rhs_eta_pos_neg)
    cases += _three_routes("eta(2,0;2)", SpecialKind.ETA_POS_NEG, (2, 0), 1, -(z2 + z3 * 2), rhs_eta_pos_neg)
    cases += _three_routes("eta(3,0;1)", SpecialKind.ETA_POS_NEG, (3, 0), 0, -(z3 * 2), rhs_eta_pos_neg)
    cases += _three_routes("eta(2,-1;1)", SpecialKind.ETA_POS_NEG, (2, 1), 0, -(z2 * half) - half, rhs_eta_pos_neg)
    cases += _three_routes("eta(3,-1;1)", SpecialKind.ETA_POS_NEG, (3, 1), 0, -(z2 * half) - z3, rhs_eta_pos_neg)

    # η(-n,k)
    cases += _three_routes("eta(0,1;1)", SpecialKind.ETA_NEG_POS, (0, 1), 0, 1 - z2, rhs_eta_neg_pos, "eta_0_1")
    cases += _three_routes("eta(-1,3;1)", SpecialKind.ETA_NEG_POS, (1, 3), 0, z2 * half - z3, rhs_eta_neg_pos)
    cases += _three_routes(
        "eta(-1,1;1)", SpecialKind.ETA_NEG_POS, (1, 1), 0, Fraction(-1, 4), rhs_eta_neg_pos, "eta_neg1_1"
    )
    for m in range(5):
        cases.append(
            Case(
                f"paper/eta(0,1;m+1)/m={m}",
                f"η(0,1;{m + 1}) theorem sum against -sζ(s+1)+1",
                "theorem",
                "closed form",
                lambda _cfg, m=m: rhs_eta_neg_pos(0, 1, m),
                lambda _cfg, m=m: closed_form_eval("eta_0_1", m + 1),
            )
        )
    cases.append(
        _indicator(
            "paper/eta(0,1;2)/printed-reading",
            "η(0,1;2) summed without the (a+1) weight misses -sζ(s+1)+1; the weighted reading is the one used",
            "printed reading misses",
            lambda: eta_0_1_printed_reading(1).distance(closed_form_eval("eta_0_1", 2)),
        )
    )

    # η(1,1,-1)
    for m in range(9):
        cases.append(
            Case(
                f"paper/eta(1,1,-1;m+1)/exact/m={m}",
                f"η(1,1,-1;{m + 1}) exact sum against (m+2)(m+1)/2^(m+4) - (m+1)/2^(m+2) + m+1",
                "theorem",
                "printed expression",
                lambda _cfg, m=m: rhs_eta_ones_neg(3, 1, m),
                _const(Fraction((m + 2) * (m + 1), 2 ** (m + 4)) - Fraction(m + 1, 2 ** (m + 2)) + (m + 1)),
            )
        )
    for m in range(4):
        cases.append(
            Case(
                f"paper/eta(1,1,-1;m+1)/quadrature/m={m}",
                f"η(1,1,-1;{m + 1}) exact sum against quadrature",
                "quadrature",
                "theorem",
                _quad(SpecialKind.ETA_ONES_NEG, (3, 1), m + 1),
                lambda _cfg, m=m: rhs_eta_ones_neg(3, 1, m),
                1e-8,
            )
        )
    cases.append(
        Case(
            "paper/eta(1,1,-1;1)/value",
            "η(1,1,-1;1) = 7/8",
            "theorem",
            "printed",
            lambda _cfg: rhs_eta_ones_neg(3, 1, 0),
            _const(Fraction(7, 8)),
        )
    )
    cases.append(
        Case(
            "paper/eta(1,1,-1;1)/closed-form",
            "η(1,1,-1;s) closed form at s = 1",
            "closed form",
            "printed",
            lambda _cfg: closed_form_eval("eta_1_1_neg1", 1),
            _const(Fraction(7, 8)),
        )
    )

    # ξ(-n,k)
    cases += _three_routes("xi(0,2;1)", SpecialKind.XI_NEG_POS, (0, 2), 0, z2 - z3, rhs_xi_neg_pos)
    cases += _three_routes("xi(-1,3;1)", SpecialKind.XI_NEG_POS, (1, 3), 0, (z2 - z3) * half, rhs_xi_neg_pos)
    for params in ((0, 2), (1, 3)):
        cases.append(_theorem_case(SpecialKind.XI_NEG_POS, params, 1, rhs_xi_neg_pos, prefix="paper"))

    # ξ̃(k,-n)
    minus_one = Fraction(-1)
    cases += _three_routes(
        "xitilde(1,-2;1)", SpecialKind.XITILDE_POS_NEG, (1, 2), 0, minus_one, rhs_xitilde_pos_neg, "xitilde_1_neg2"
    )
    cases += _three_routes("xitilde(2,-3;1)", SpecialKind.XITILDE_POS_NEG, (2, 3), 0, minus_one, rhs_xitilde_pos_neg)
    cases += _three_routes("xitilde(3,-4;1)", SpecialKind.XITILDE_POS_NEG, (3, 4), 0, minus_one, rhs_xitilde_pos_neg)
    for s in (0.5, 1.0, 2.0, 3.0):
        cases.append(
            Case(
                f"paper/xitilde(1,-2;s)/s={s:g}",
                f"ξ̃(1,-2;{s:g}) by quadrature against -(s-3)/2^s + s - 3",
                "quadrature",
                "closed form",
                _quad(SpecialKind.XITILDE_POS_NEG, (1, 2), s),
                lambda _cfg, s=s: closed_form_eval("xitilde_1_neg2", s),
                1e-8,
            )
        )
    for m in range(5):
        cases.append(
            Case(
                f"paper/xitilde(1,-2;m+1)/m={m}",
                f"ξ̃(1,-2;{m + 1}) theorem sum against -(m-2)/2^(m+1) + m - 2",
                "theorem",
                "printed expression",
                lambda _cfg, m=m: rhs_xitilde_pos_neg(1, 2, m),
                _const(Fraction(-(m - 2), 2 ** (m + 1)) + m - 2),
            )
        )

    # star identities
    cases.append(
        Case(
            "paper/mzsv(1,2)",
            "ζ*(1,2) = 2ζ(3)",
            "holder",
            "zeta",
            lambda cfg: mzsv_num((1, 2), tol=cfg.mzv_tol),
            lambda _cfg: z3 * 2,
            1e-8,
        )
    )
    cases.append(
        Case(
            "paper/mzv(1,2)",
            "ζ(1,2) = ζ(3)",
            "holder",
            "zeta",
            lambda cfg: mzv_num((1, 2), tol=cfg.mzv_tol),
            lambda _cfg: z3,
            1e-8,
        )
    )
    cases.append(
        Case(
            "paper/mhzsv(1,2;2,2)",
            "ζ*(1,2;{2}^2) = 2ζ(3) - ζ(2)",
            "holder",
            "zeta",
            lambda cfg: mhzsv_num(HurwitzStarArgs.uniform((1, 2), 2), tol=cfg.mzv_tol),
            lambda _cfg: z3 * 2 - z2,
            1e-7,
        )
    )

    # coefficient ground truth
    cases.extend(printed_coefficient_cases("paper"))
    for n in range(13):
        cases.append(
            _zero_case(
                f"paper/d-row-sum/n={n:02d}",
                f"sum_l D^({n})_l = 0",
                "D row sum",
                lambda n=n: sum((d_coeff(n, ell) for ell in range(n + 2)), ZERO),
            )
        )

    # values at s = -m
    continuation: list[tuple[str, Callable[[int], Fraction], Callable[[int], Fraction]]] = [
        ("B(1,0)", lambda m: poly_bernoulli_B((1, 0), m), lambda m: Fraction(m)),
        ("B(-1,1)", lambda m: poly_bernoulli_B((-1, 1), m), lambda m: Fraction(2) ** (m - 1) - half),
        (
            "B(1,1,-1)",
            lambda m: poly_bernoulli_B((1, 1, -1), m),
            lambda m: m * (m - 1) * Fraction(2) ** (m - 3) + m * Fraction(2) ** (m - 1) - m,
        ),
        ("C(1,-2)", lambda m: poly_bernoulli_C((1, -2), m), lambda m: (m + 3) * (2**m - 1)),
    ]
    for name, number, expression in continuation:
        for m in range(continuation_m + 1):
            cases.append(
                Case(
                    f"paper/continuation/{name}/m={m:02d}",
                    f"{name}_{m} equals the closed form in s at s = -{m}",
                    "generating function",
                    "closed form at -m",
                    lambda _cfg, number=number, m=m: number(m),
                    lambda _cfg, expression=expression, m=m: Fraction(expression(m)),
                )
            )

    # adjudicated readings
    cases.append(
        _indicator(
            "paper/adjudication/e-exponent",
            "η(1,1,-1;1) with exponent m+r-l misses 7/8; the exponent m+r-l+1 is the one used",
            "rejected reading misses",
            lambda: abs(float(rhs_eta_ones_neg(3, 1, 0, exponent_offset=0)) - 7 / 8),
        )
    )
    cases.append(
        _indicator(
            "paper/adjudication/xitilde-base",
            "ξ̃(2,-3;1) with first-sum base n-l-j+1 misses -1; the base n-l-j is the one used",
            "rejected reading misses",
            lambda: rhs_xitilde_pos_neg(2, 3, 0, base_offset=1).distance(-1),
        )
    )
    for m in range(4):
        cases.append(
            Case(
                f"paper/adjudication/eta(1,0;m+1)/m={m}",
                f"η({{1}}^1,-0;{m + 1}) exact sum against -s",
                "theorem",
                "closed form",
                lambda _cfg, m=m: rhs_eta_ones_neg(2, 0, m),
                lambda _cfg, m=m: closed_form_eval("eta_1_0", m + 1),
            )
        )

    # every registered closed form against quadrature
    for form in REGISTRY.values():
        for s in (0.5, 1.0, 1.5, 2.0, 3.0):
            request = SpecialFunctionRequest.from_index(form.fn, SignedIndex(form.index), s)
            cases.append(
                Case(
                    f"paper/closed-form/{form.name}/s={s:g}",
                    f"{request.label}: {form.formula} against quadrature",
                    "quadrature",
                    "closed form",
                    _quad(request.kind, request.parameters, s),
                    lambda _cfg, name=form.name, s=s: closed_form_eval(name, s),
                )
            )
    return cases


SUITES: dict[str, Callable[[RunConfig], list[Case]]] = {
    "coefficients": coefficient_cases,
    "polybernoulli": polybernoulli_cases,
    "duality": duality_cases,
    "lemmas": lemma_cases,
    "theorems": theorem_cases,
    "paper-examples": paper_example_cases,
}


def build_suite(name: str, config: RunConfig) -> list[Case]:
    """Cases of suite ``name``; ``"all"`` is the union in `SUITES` order.

    Raises:
        ConfigError: If the suite is unknown.
    """
    if name not in SUITE_NAMES:
        raise ConfigError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    if name == "all":
        return [case for builder in SUITES.values() for case in builder(config)]
    return SUITES[name](config)
