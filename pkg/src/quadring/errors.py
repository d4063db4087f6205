"""Domain errors raised by the package.

Each error name is part of the public contract: the CLI reports failures by
the class name, so these stay stable.
"""


class QuadringError(Exception):
    """Base class for all domain errors."""


class DegenerateD(QuadringError):
    """d in {0, 1} does not define a quadratic field."""


class NotSquarefree(QuadringError):
    """d has a repeated prime factor."""


class UnsupportedField(QuadringError):
    """|d| exceeds the supported desk-scale cap."""


class FieldMismatch(QuadringError):
    """Operands belong to different quadratic fields."""


class ZeroIdeal(QuadringError):
    """The zero ideal is outside the ideal semigroup handled here."""


class ZeroElement(QuadringError):
    """Operation requires a nonzero element."""


class NotPrime(QuadringError):
    """Argument must be a rational prime."""


class NonPositive(QuadringError):
    """Argument must be a positive integer."""


class NotImaginary(QuadringError):
    """Operation is defined for imaginary fields (d < 0) only."""


class NotUFD(QuadringError):
    """The ring of integers is not a unique factorization domain."""


class SearchExhausted(QuadringError):
    """A bounded search hit its iteration cap without an answer."""
