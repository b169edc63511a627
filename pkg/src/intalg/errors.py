"""Exception hierarchy shared by all intalg modules."""

from __future__ import annotations


class IntalgError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedOrderError(IntalgError):
    """An operation was requested at an algebra order that does not support it."""


class OrderMismatchError(IntalgError):
    """Operands live in algebras of different orders."""


class ModeMismatchError(IntalgError):
    """Operands carry different arithmetic modes."""


class NotInvertibleError(IntalgError):
    """The element has no multiplicative inverse."""


class DivisionNotAllowedError(NotInvertibleError):
    """Interval division by a non-invertible divisor.

    Carries the offending divisor so callers can report it.
    """

    def __init__(self, message: str, divisor=None):
        super().__init__(message)
        self.divisor = divisor


class DomainError(IntalgError):
    """Argument outside the domain of a lifted scalar function."""


class ShapeMismatchError(IntalgError):
    """Vector/matrix shapes do not conform."""


class ConvergenceError(IntalgError):
    """An iterative algorithm hit its iteration cap before converging.

    ``trace`` holds the per-step records produced so far (may be None for
    algorithms without a trace); ``residual`` holds the last residual seen.
    """

    def __init__(self, message: str, trace=None, residual=None):
        super().__init__(message)
        self.trace = trace
        self.residual = residual


class ExprSyntaxError(IntalgError):
    """Expression text could not be parsed. ``position`` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalError(IntalgError):
    """Expression evaluation failed (e.g. unbound variable)."""
