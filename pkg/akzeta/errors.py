from __future__ import annotations


class AkzetaError(Exception):
    """Base class for every error raised by akzeta."""


class AdmissibilityError(AkzetaError, ValueError):
    """Raised when an index or parameter set lies outside a function's domain.

    Attributes:
        rule: Human-readable statement of the violated constraint.
    """

    def __init__(self, rule: str, detail: str | None = None) -> None:
        self.rule = rule
        message = rule if detail is None else f"{detail}: {rule}"
        super().__init__(message)


class EtaAdmissibilityError(AdmissibilityError):
    pass


class XiAdmissibilityError(AdmissibilityError):
    pass


class XiTildeAdmissibilityError(AdmissibilityError):
    pass


class IndexRangeError(AkzetaError, IndexError):
    """Raised for coefficient-table lookups outside the declared index range."""


class SeriesError(AkzetaError, ArithmeticError):
    """Raised when a truncated-series operation cannot be carried out exactly."""


class DomainError(AkzetaError, ValueError):
    """Raised when a numeric routine is called outside its domain."""


class ConfigError(AkzetaError, ValueError):
    """Raised for unknown configuration keys, bad values, unknown suites or closed forms."""
