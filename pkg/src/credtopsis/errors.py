"""Domain errors raised by the decision engine.

Everything derives from :class:`DecisionError` so callers (notably the CLI)
can separate bad inputs from genuine I/O failures, which keep raising the
builtin ``OSError`` family.
"""


class DecisionError(Exception):
    """Base class for all errors raised by this package."""


class OrderingViolation(DecisionError):
    """Triangular fuzzy number components are not ordered lower <= mode <= upper."""


class NegativeOperand(DecisionError):
    """Operand must be nonnegative for componentwise products/quotients to stay ordered."""


class DivisorNotPositive(DecisionError):
    """Every divisor component must be strictly positive."""


class NonPositiveScalar(DecisionError):
    """Scalar multiplication is defined for k > 0 only."""


class QuadratureFailure(DecisionError):
    """Numeric integration could not reach the requested tolerance."""


class UnknownTerm(DecisionError):
    """Linguistic term is not present in the rating scale."""


class NonPositiveMode(DecisionError):
    """Geometric-mean aggregation requires every mode to be positive."""


class ZeroDivisor(DecisionError):
    """Normalization hit a zero column maximum or a nonpositive cell bound."""


class DimensionMismatch(DecisionError):
    """Vector or matrix dimensions do not agree with the problem."""


class ParseError(DecisionError):
    """Problem or scenario document is not well-formed."""


class ValidationError(DecisionError):
    """Document parsed but violates an invariant; ``path`` locates the field."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
