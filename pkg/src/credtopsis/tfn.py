"""Triangular fuzzy numbers and their arithmetic.

A triangular fuzzy number (TFN) is an ordered triple ``(lower, mode, upper)``
whose membership function rises linearly from ``lower`` to 1 at ``mode`` and
falls linearly back to 0 at ``upper``. Addition and scalar multiplication are
componentwise; subtraction pairs opposite bounds; multiplication and division
are the componentwise forms that are only order-preserving on nonnegative
operands, hence the preconditions below.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DivisorNotPositive,
    NegativeOperand,
    NonPositiveScalar,
    OrderingViolation,
)


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Immutable TFN; every operation returns a new value."""

    lower: float
    mode: float
    upper: float

    def __post_init__(self):
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "mode", float(self.mode))
        object.__setattr__(self, "upper", float(self.upper))
        if not (self.lower <= self.mode <= self.upper):
            raise OrderingViolation(
                f"components must satisfy lower <= mode <= upper, "
                f"got ({self.lower}, {self.mode}, {self.upper})"
            )

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.lower, self.mode, self.upper)

    @property
    def is_crisp(self) -> bool:
        return self.lower == self.upper

    def membership(self, z: float) -> float:
        """Degree of membership of ``z``, in [0, 1].

        Piecewise linear with value 1 at the mode; degenerate legs
        (zero-width sides) evaluate to 1 at the shared point.
        """
        if z < self.lower or z > self.upper:
            return 0.0
        if z == self.mode:
            return 1.0
        if z < self.mode:
            return (z - self.lower) / (self.mode - self.lower)
        return (self.upper - z) / (self.upper - self.mode)

    def add(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        return TriangularFuzzyNumber(
            self.lower + other.lower, self.mode + other.mode, self.upper + other.upper
        )

    def subtract(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        """Fuzzy difference; note it pairs opposite bounds, so x - x is not crisp zero."""
        return TriangularFuzzyNumber(
            self.lower - other.upper, self.mode - other.mode, self.upper - other.lower
        )

    def multiply(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        if self.lower < 0 or other.lower < 0:
            raise NegativeOperand(
                "componentwise product requires nonnegative operands"
            )
        return TriangularFuzzyNumber(
            self.lower * other.lower, self.mode * other.mode, self.upper * other.upper
        )

    def divide(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        if other.lower <= 0 or other.mode <= 0 or other.upper <= 0:
            raise DivisorNotPositive(
                f"divisor components must be strictly positive, got {other.as_tuple()}"
            )
        if self.lower < 0:
            raise NegativeOperand("componentwise quotient requires a nonnegative dividend")
        return TriangularFuzzyNumber(
            self.lower / other.upper, self.mode / other.mode, self.upper / other.lower
        )

    def scale(self, k: float) -> TriangularFuzzyNumber:
        if k <= 0:
            raise NonPositiveScalar(f"scalar must be positive, got {k}")
        return TriangularFuzzyNumber(k * self.lower, k * self.mode, k * self.upper)

    def __repr__(self):
        return f"TFN({self.lower:g}, {self.mode:g}, {self.upper:g})"


TFN = TriangularFuzzyNumber
