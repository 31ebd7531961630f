"""exceptions.py
Custom exception classes for the intersection-cohomology calculator.
"""
from .constants import EXIT_CHECK_FAILED, EXIT_USAGE


class IHCalculatorError(Exception):
    """Base class for exceptions in this application.

    Accepts arbitrary keyword arguments (e.g. ``datum``, ``numerator``) so that
    callers can attach the values that triggered the failure without breaking
    the exception signature.
    """

    exit_code: int = EXIT_CHECK_FAILED

    def __init__(self, message: str = "", **kwargs):
        super().__init__(message)
        for key, value in kwargs.items():
            setattr(self, key, value)

    def __str__(self):
        base = super().__str__()
        extras = {k: v for k, v in self.__dict__.items() if k not in ("args",)}
        if extras:
            return f"{base} | Context: {extras}"
        return base


class ConfigurationError(IHCalculatorError):
    """Invalid settings or environment."""

    exit_code = EXIT_USAGE


# -- Input errors: the caller supplied something unusable (exit status 2) --
class InputError(IHCalculatorError):
    """Base class for parse, usage and parameter errors."""

    exit_code = EXIT_USAGE


class ParseError(InputError):
    """A structured document or polynomial string could not be parsed."""


class NegativeParameterError(InputError, ValueError):
    """A Grassmannian / projective-space index was negative."""


class InvalidDatumError(InputError, ValueError):
    """A Schubert or hypersurface datum violates its constraints."""


class CaseMismatchError(InputError):
    """A case formula was requested for a datum of the other case."""


class NotApplicableError(InputError):
    """A route or formula does not apply to the given datum."""


class CaseNotApplicableError(InputError):
    """r(t) is undefined because p - q < 0."""


# -- Check failures: the mathematics disagrees (exit status 1) --
class CheckFailure(IHCalculatorError):
    """Base class for failed mathematical checks."""

    exit_code = EXIT_CHECK_FAILED


class NotDivisibleError(CheckFailure, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InternalIntegralityError(CheckFailure):
    """g(t) ended up with a non-integral coefficient."""


class HypothesisViolatedError(CheckFailure):
    """The IH polynomial is not a valid Poincaré polynomial for the input."""


class RouteDisagreementError(CheckFailure):
    """Two IH computation routes returned different polynomials."""


class ClosedFormMismatchError(CheckFailure):
    """The intersection-ring evaluation differs from the closed form."""


class InternalMismatchError(CheckFailure):
    """Two internal derivations of the same number disagree."""


class EngineMismatchError(CheckFailure):
    """A model-specific formula disagrees with the generic engine."""
