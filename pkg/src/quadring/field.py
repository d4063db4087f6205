"""Quadratic fields Q(sqrt(d)) and exact arithmetic in their rings of integers Z[w].

For squarefree d, the ring of integers is Z[w] with

    w = sqrt(d)            if d = 2, 3 (mod 4)    (w**2 = d)
    w = (1 + sqrt(d)) / 2  if d = 1 (mod 4)       (w**2 = w + (d-1)/4)

Elements are immutable pairs (x, y) meaning x + y*w, always tied to their field;
mixing fields raises FieldMismatch rather than coercing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateD, FieldMismatch, NotSquarefree, UnsupportedField
from .intmath import is_squarefree

MAX_ABS_D = 10**6

_ELEMENT_RE = re.compile(r"^([+-]?\d+)([+-]\d+)\*w$")


class OmegaKind(Enum):
    SQRT_D = "sqrt_d"
    HALF_ONE_PLUS_SQRT_D = "half_one_plus_sqrt_d"


@dataclass(frozen=True)
class QuadraticField:
    """The field Q(sqrt(d)) together with its ring of integers Z[w].

    d is squarefree, d not in {0, 1}. The discriminant D is d when d = 1 (mod 4)
    and 4d otherwise; the Galois group over Q has order 2 throughout.
    """

    d: int
    D: int
    omega_kind: OmegaKind
    degree: int = 2

    def element(self, x: int, y: int = 0) -> AlgebraicInteger:
        return AlgebraicInteger(self, x, y)

    def omega(self) -> AlgebraicInteger:
        return AlgebraicInteger(self, 0, 1)

    def one(self) -> AlgebraicInteger:
        return AlgebraicInteger(self, 1, 0)

    @property
    def omega_shift(self) -> int:
        """m in the reduction w**2 = m + t*w: m = d or (d-1)/4."""
        if self.omega_kind is OmegaKind.SQRT_D:
            return self.d
        return (self.d - 1) // 4

    @property
    def omega_linear(self) -> int:
        """t in the reduction w**2 = m + t*w: 0 or 1."""
        return 0 if self.omega_kind is OmegaKind.SQRT_D else 1

    def parse_element(self, text: str) -> AlgebraicInteger:
        """Parse the `x+y*w` text format, e.g. `3+1*w` or `-3+0*w`."""
        m = _ELEMENT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"malformed element {text!r}, expected x+y*w")
        return AlgebraicInteger(self, int(m.group(1)), int(m.group(2)))

    def __repr__(self) -> str:
        return f"QuadraticField(d={self.d})"


def make_field(d: int) -> QuadraticField:
    """Build Q(sqrt(d)) for squarefree d outside {0, 1}."""
    if d in (0, 1):
        raise DegenerateD(f"d={d} does not define a quadratic field")
    if abs(d) > MAX_ABS_D:
        raise UnsupportedField(f"|d| > {MAX_ABS_D} is outside the supported range")
    if not is_squarefree(d):
        raise NotSquarefree(f"d={d} has a square factor")
    if d % 4 == 1:
        return QuadraticField(d=d, D=d, omega_kind=OmegaKind.HALF_ONE_PLUS_SQRT_D)
    return QuadraticField(d=d, D=4 * d, omega_kind=OmegaKind.SQRT_D)


@dataclass(frozen=True)
class AlgebraicInteger:
    """x + y*w in the ring of integers of a quadratic field, exact coordinates."""

    field: QuadraticField
    x: int
    y: int

    def _require_same_field(self, other: AlgebraicInteger) -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"elements of d={self.field.d} and d={other.field.d} do not mix"
            )

    def __add__(self, other: AlgebraicInteger) -> AlgebraicInteger:
        if not isinstance(other, AlgebraicInteger):
            return NotImplemented
        self._require_same_field(other)
        return AlgebraicInteger(self.field, self.x + other.x, self.y + other.y)

    def __sub__(self, other: AlgebraicInteger) -> AlgebraicInteger:
        if not isinstance(other, AlgebraicInteger):
            return NotImplemented
        self._require_same_field(other)
        return AlgebraicInteger(self.field, self.x - other.x, self.y - other.y)

    def __neg__(self) -> AlgebraicInteger:
        return AlgebraicInteger(self.field, -self.x, -self.y)

    def __mul__(self, other: AlgebraicInteger) -> AlgebraicInteger:
        """Product, reduced by w**2 = m + t*w for the field's kind of w."""
        if not isinstance(other, AlgebraicInteger):
            return NotImplemented
        self._require_same_field(other)
        f = self.field
        yy = self.y * other.y
        x = self.x * other.x + f.omega_shift * yy
        y = self.x * other.y + self.y * other.x + f.omega_linear * yy
        return AlgebraicInteger(f, x, y)

    def __pow__(self, k: int) -> AlgebraicInteger:
        if k < 0:
            raise ValueError("negative powers leave the ring of integers")
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> AlgebraicInteger:
        """The Galois conjugate: sends sqrt(d) to -sqrt(d); an involution."""
        if self.field.omega_kind is OmegaKind.SQRT_D:
            return AlgebraicInteger(self.field, self.x, -self.y)
        # w = (1+sqrt(d))/2 maps to 1 - w
        return AlgebraicInteger(self.field, self.x + self.y, -self.y)

    def norm(self) -> int:
        """The rational integer alpha * conjugate(alpha); multiplicative."""
        f = self.field
        if f.omega_kind is OmegaKind.SQRT_D:
            return self.x * self.x - f.d * self.y * self.y
        return self.x * self.x + self.x * self.y - f.omega_shift * self.y * self.y

    def trace(self) -> int:
        return 2 * self.x + self.field.omega_linear * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}*w"

    def __repr__(self) -> str:
        return f"AlgebraicInteger(d={self.field.d}, {self})"
