"""Exception hierarchy shared by every module."""


class LSeriesError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(LSeriesError, ValueError):
    """An operation was called outside its domain."""


class PoleError(PreconditionError):
    """L(1, f) was requested for a function with nonzero mean.

    ``residue`` holds q^{-1} * sum f(a), the residue of the simple pole.
    """

    def __init__(self, residue, message=None):
        self.residue = residue
        super().__init__(message or f"L(s, f) has a pole at s=1 with residue {residue}")


class ModulusTooLarge(PreconditionError):
    """The modulus exceeds the configured cap."""


class ParseError(LSeriesError, ValueError):
    """A function specification document could not be parsed exactly."""


class PrecisionExhausted(LSeriesError, ArithmeticError):
    """Certified numerics could not reach the required accuracy."""


class RouteDisagreement(LSeriesError, AssertionError):
    """Two independent decision routes disagree (never expected)."""
