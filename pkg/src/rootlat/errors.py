"""Exception hierarchy shared by all rootlat modules."""

from __future__ import annotations


class RootLatError(Exception):
    """Base class for every error raised by rootlat."""


class DivisionByZero(RootLatError, ZeroDivisionError):
    pass


class NotCoprime(RootLatError, ValueError):
    pass


class NotReal(RootLatError, ValueError):
    pass


class NotAlgebraicInteger(RootLatError, ValueError):
    pass


class InvalidGenerator(RootLatError, ValueError):
    pass


class NotInQK(RootLatError, ValueError):
    pass


class NotSubfield(RootLatError, ValueError):
    pass


class IntegralityViolation(RootLatError):
    """A coordinate that must be an algebraic integer in K is not one.

    Never expected on valid input; it signals a bug.
    """


class ClassificationMismatch(RootLatError):
    """Two independent routes to the rank-2 classification disagree."""


class InadmissibleType(RootLatError, ValueError):
    pass


class CapExceeded(RootLatError):
    pass


class NonGenericFunctional(RootLatError, ValueError):
    def __init__(self, message: str, root=None):
        super().__init__(message)
        self.root = root


class VerificationFailure(RootLatError):
    pass


class InvalidRootPair(RootLatError, ValueError):
    pass


class UnrecognizedDiagram(RootLatError, ValueError):
    pass


class ParseError(RootLatError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
