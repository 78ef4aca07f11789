"""Exception hierarchy.

Errors split into two families so the command line can map them onto exit
codes: ``InputError`` for malformed or out-of-range requests, and
``ConstraintViolation`` for fixed-point data that cannot come from a stably
complex torus manifold.
"""


class ToricGenusError(Exception):
    pass


class InputError(ToricGenusError):
    pass


class ConstraintViolation(ToricGenusError):
    pass


class NotDivisible(ToricGenusError, ArithmeticError):
    pass


class SingularPoint(ToricGenusError, ZeroDivisionError):
    """A weight vanishes at the evaluation point."""


class ZeroWeight(InputError):
    pass


class BadParameters(InputError):
    pass


class BadOmega(InputError):
    pass


class TooFewVariables(InputError):
    pass


class TooManyParts(InputError):
    pass


class OutOfRange(InputError):
    pass


class ParseError(InputError):
    pass


class VanishingViolation(ConstraintViolation):
    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals or []


class IntegralityViolation(ConstraintViolation):
    pass


class NonIntegralSolution(ConstraintViolation):
    pass


class SingularMatrix(ToricGenusError, ArithmeticError):
    pass
