"""Exception hierarchy shared by the library, the CLI and the HTTP service.

Every error that can reach a user carries a short stable ``name`` used in
CLI stderr output and in service error payloads, plus the offending input
when that helps diagnosis.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all anticipated failures."""

    name = "DomainError"

    def __init__(self, message: str, *, value=None):
        super().__init__(message)
        self.message = message
        self.value = value

    def payload(self) -> dict:
        out = {"error": self.name, "message": self.message}
        if self.value is not None:
            out["input"] = self.value
        return out


class NonIntegralError(DomainError):
    """A count that must be an integer came out fractional."""

    name = "NonIntegral"


class NotRealizableError(DomainError):
    """Dimension data admits no graded connected Hopf algebra over a field
    of characteristic zero (some derived generator count is negative)."""

    name = "NotRealizable"


class DegreeOutOfRangeError(DomainError):
    """Requested degree exceeds the truncation the object was built with."""

    name = "DegreeOutOfRange"


class SeriesMismatchError(DomainError):
    """Arithmetic on series with incompatible truncation, flavor or ring."""

    name = "SeriesMismatch"


class NonUnitConstantError(DomainError):
    """Division, log or inversion needs an invertible constant term."""

    name = "NonUnitConstant"


class NotRationalError(DomainError):
    """The requested analysis needs a rational generating function."""

    name = "NotRational"


class HypothesisViolatedError(DomainError):
    """An analytic hypothesis of the asymptotic formula fails; the report
    names the first failing check."""

    name = "HypothesisViolated"

    def __init__(self, message: str, *, check: str, value=None):
        super().__init__(message, value=value)
        self.check = check

    def payload(self) -> dict:
        out = super().payload()
        out["check"] = self.check
        return out


class TooLargeError(DomainError):
    """Enumeration or construction would exceed a configured size cap."""

    name = "TooLarge"


class NotApplicableError(DomainError):
    """Operation requires structure the object does not have
    (e.g. Eulerian idempotents on a noncommutative, noncocommutative
    instance)."""

    name = "NotApplicable"


class NotNilpotentError(DomainError):
    """id - S^2 failed to vanish within the graded nilpotency bound."""

    name = "NotNilpotent"


class CacheMissError(DomainError):
    """Reference sequence not cached and network access not allowed."""

    name = "CacheMiss"


class InvalidInputError(DomainError):
    """Malformed user input (bad rational literal, bad sequence id, ...)."""

    name = "InvalidInput"
