from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

Scalar = int | Fraction


class Basis(str, Enum):
    """Monomial basis a `BasisPolynomial` is expressed in."""

    Z = "z"
    ONE_MINUS_Z = "1-z"


@dataclass(frozen=True)
class BasisPolynomial:
    """Exact rational polynomial tagged with the basis its coefficients refer to.

    Coefficient ``j`` multiplies ``z**j`` in the ``Z`` basis and ``(1 - z)**j`` in
    the ``ONE_MINUS_Z`` basis. Trailing zeros are trimmed on construction, so the
    zero polynomial has no coefficients and degree -1.

    Attributes:
        coefficients: Exact coefficients indexed by degree.
        basis: The basis the coefficients refer to.
    """

    coefficients: tuple[Fraction, ...] = ()
    basis: Basis = Basis.Z

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients: Scalar, basis: Basis = Basis.Z) -> BasisPolynomial:
        return cls(tuple(Fraction(c) for c in coefficients), basis)

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1, basis: Basis = Basis.Z) -> BasisPolynomial:
        return cls((Fraction(0),) * degree + (Fraction(coefficient),), basis)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, j: int) -> Fraction:
        """Return coefficient ``j``; zero outside the stored range."""
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    def _check_basis(self, other: BasisPolynomial) -> None:
        if other.basis is not self.basis:
            raise ValueError(f"cannot combine polynomials in bases {self.basis.value} and {other.basis.value}")

    def __add__(self, other: BasisPolynomial) -> BasisPolynomial:
        self._check_basis(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return BasisPolynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)), self.basis)

    def __neg__(self) -> BasisPolynomial:
        return BasisPolynomial(tuple(-c for c in self.coefficients), self.basis)

    def __sub__(self, other: BasisPolynomial) -> BasisPolynomial:
        return self + (-other)

    def __mul__(self, other: BasisPolynomial | Scalar) -> BasisPolynomial:
        if not isinstance(other, BasisPolynomial):
            factor = Fraction(other)
            return BasisPolynomial(tuple(c * factor for c in self.coefficients), self.basis)
        self._check_basis(other)
        if self.is_zero() or other.is_zero():
            return BasisPolynomial((), self.basis)
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return BasisPolynomial(tuple(out), self.basis)

    __rmul__ = __mul__

    def rebased(self, target: Basis) -> BasisPolynomial:
        """Express the same function in ``target`` basis.

        Substituting ``z = 1 - w`` (or ``w = 1 - z``) is an involution, so both
        directions use ``c_j = (-1)^j * sum_{i >= j} a_i * C(i, j)``.

        Args:
            target: Basis of the result.

        Returns:
            A polynomial of the same degree expressed in ``target``.
        """
        if target is self.basis:
            return self
        a = self.coefficients
        out = []
        for j in range(len(a)):
            acc = sum((a[i] * comb(i, j) for i in range(j, len(a))), Fraction(0))
            out.append(-acc if j % 2 else acc)
        return BasisPolynomial(tuple(out), target)

    def divided_by_z(self, power: int = 1) -> BasisPolynomial:
        """Exact division by ``z**power``.

        Raises:
            ValueError: If the polynomial is not divisible by ``z**power``.
        """
        poly = self.rebased(Basis.Z)
        if any(c != 0 for c in poly.coefficients[:power]):
            raise ValueError(f"{poly} is not divisible by z^{power}")
        return BasisPolynomial(poly.coefficients[power:], Basis.Z)

    def __call__(self, z: Scalar | float) -> Fraction | float:
        """Evaluate at ``z`` with Horner's scheme; exact for rational ``z``."""
        x = z if self.basis is Basis.Z else 1 - z
        acc: Fraction | float = Fraction(0) if isinstance(z, int | Fraction) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + (c if isinstance(acc, Fraction) else float(c))
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        var = "z" if self.basis is Basis.Z else "(1-z)"
        terms: list[str] = []
        for j, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                power = var if j == 1 else f"{var}^{j}"
                body = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            terms.append(body if not terms and sign == "+" else f"{sign} {body}" if terms else f"-{body}")
        return " ".join(terms)
