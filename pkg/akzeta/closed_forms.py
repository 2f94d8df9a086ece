"""Registered closed forms in s for low-index η and ξ̃ functions.

Each entry gives the function for real ``s > 0`` and its exact value at
``s = -m``, where the function continues to a poly-Bernoulli number.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import zeta_nonpositive
from .errors import ConfigError
from .kernel.values import NumericValue
from .kernel.zeta import zeta_num


@dataclass(frozen=True)
class ClosedForm:
    """One closed-form expression.

    Attributes:
        name: Registry key, e.g. ``"eta_1_0"``.
        fn: ``"eta"`` or ``"xitilde"``.
        index: Signed index of the function.
        formula: Human-readable expression in s.
        at_positive: Evaluator for real ``s > 0``.
        at_nonpositive: Exact value at ``s = -m`` for integers ``m >= 0``.
        continuation: ``"B"`` or ``"C"``, the poly-Bernoulli family the value at ``-m`` equals.
    """

    name: str
    fn: str
    index: tuple[int, ...]
    formula: str
    at_positive: Callable[[float], NumericValue]
    at_nonpositive: Callable[[int], Fraction]
    continuation: str


def _eta_0_1(s: float) -> NumericValue:
    return 1 - zeta_num(s + 1) * s


def _eta_0_1_at(m: int) -> Fraction:
    # s ζ(s+1) -> 1 as s -> 0
    if m == 0:
        return Fraction(0)
    return m * zeta_nonpositive(m - 1) + 1


REGISTRY: dict[str, ClosedForm] = {
    c.name: c
    for c in (
        ClosedForm(
            "eta_1_0",
            "eta",
            (1, 0),
            "-s",
            lambda s: NumericValue.exact(-s),
            lambda m: Fraction(m),
            "B",
        ),
        ClosedForm("eta_0_1", "eta", (0, 1), "-s ζ(s+1) + 1", _eta_0_1, _eta_0_1_at, "B"),
        ClosedForm(
            "eta_neg1_1",
            "eta",
            (-1, 1),
            "2^(1-s)/4 - 1/2",
            lambda s: NumericValue.exact(2.0 ** (1 - s) / 4 - 0.5),
            lambda m: Fraction(2) ** (m + 1) / 4 - Fraction(1, 2),
            "B",
        ),
        ClosedForm(
            "eta_1_1_neg1",
            "eta",
            (1, 1, -1),
            "(s+1)s/2^(s+3) - s/2^(s+1) + s",
            lambda s: NumericValue.exact((s + 1) * s / 2.0 ** (s + 3) - s / 2.0 ** (s + 1) + s),
            lambda m: Fraction((1 - m) * -m) * Fraction(2) ** (m - 3) + m * Fraction(2) ** (m - 1) - m,
            "B",
        ),
        ClosedForm(
            "xitilde_1_neg2",
            "xitilde",
            (1, -2),
            "-(s-3)/2^s + s - 3",
            lambda s: NumericValue.exact(-(s - 3) / 2.0**s + s - 3),
            lambda m: (m + 3) * Fraction(2) ** m - m - 3,
            "C",
        ),
    )
}


def closed_form_eval(name: str, s: float) -> NumericValue:
    """Evaluate a registered closed form at real ``s``.

    Raises:
        ConfigError: If ``name`` is not registered.
    """
    try:
        form = REGISTRY[name]
    except KeyError:
        raise ConfigError(f"no closed form named {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
    return form.at_positive(s)


def closed_form_for(fn: str, index: tuple[int, ...]) -> ClosedForm | None:
    """The registered closed form of ``fn`` at ``index``, if there is one."""
    for form in REGISTRY.values():
        if form.fn == fn and form.index == tuple(index):
            return form
    return None
