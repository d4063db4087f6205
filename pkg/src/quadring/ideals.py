"""Nonzero ideals of Z[w] in Hermite normal form, and the ideal semigroup.

An ideal is stored as the unique triple (a, b, c) whose Z-basis is
{a*1, b + c*w} with a, c > 0, 0 <= b < a, c | a, c | b and a*c dividing
N(b + c*w). That last divisibility is exactly closure of the module under
multiplication by w, so valid triples and nonzero ideals are in bijection.
Equality of ideals is therefore plain component comparison.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import FieldMismatch, ZeroIdeal
from .field import AlgebraicInteger, QuadraticField
from .intmath import xgcd


def _hnf_rows(rows: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Reduce spanning rows (x, y) of a finite-index w-closed module to (a, b, c).

    Pure integer row reduction: pairs of rows with nonzero y are combined by an
    extended gcd step, the eliminated combination contributing a y=0 row. No
    modular shortcuts, so intermediate values stay exact.
    """
    xs: list[int] = []
    pivot: tuple[int, int] | None = None
    for x, y in rows:
        if y == 0:
            if x:
                xs.append(x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, u, v = xgcd(py, y)
        xs.append((y // g) * px - (py // g) * x)
        pivot = (u * px + v * x, g)
    if pivot is None:
        raise ZeroIdeal("generators span no rank-2 module")
    px, c = pivot
    if c < 0:
        px, c = -px, -c
    a = 0
    for x in xs:
        a = xgcd(a, x)[0]
    if a == 0:
        raise ZeroIdeal("generators span no rank-2 module")
    return a, px % a, c


@dataclass(frozen=True)
class Ideal:
    """A nonzero ideal of the ring of integers, basis {a, b + c*w}."""

    field: QuadraticField
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if a <= 0 or c <= 0 or not 0 <= b < a:
            raise ValueError(f"non-canonical HNF triple ({a}, {b}, {c})")
        if a % c or b % c:
            raise ValueError(f"({a}, {b}, {c}) is not w-closed: c must divide a and b")
        if self.field.element(b, c).norm() % (a * c):
            raise ValueError(f"({a}, {b}, {c}) is not w-closed: a*c must divide N(b+c*w)")

    @classmethod
    def from_generators(
        cls, field: QuadraticField, gens: Iterable[AlgebraicInteger]
    ) -> Ideal:
        """The ideal generated by gens: HNF of the Z-span of {g, g*w}."""
        rows: list[tuple[int, int]] = []
        w = field.omega()
        for g in gens:
            if g.field != field:
                raise FieldMismatch("generator belongs to a different field")
            if g.is_zero():
                continue
            gw = g * w
            rows.append((g.x, g.y))
            rows.append((gw.x, gw.y))
        if not rows:
            raise ZeroIdeal("all generators are zero")
        a, b, c = _hnf_rows(rows)
        return cls(field, a, b, c)

    @classmethod
    def principal(cls, alpha: AlgebraicInteger) -> Ideal:
        """(alpha); its norm is |N(alpha)|."""
        if alpha.is_zero():
            raise ZeroIdeal("the zero element generates the zero ideal")
        return cls.from_generators(alpha.field, [alpha])

    @classmethod
    def unit_ideal(cls, field: QuadraticField) -> Ideal:
        return cls(field, 1, 0, 1)

    def basis(self) -> tuple[AlgebraicInteger, AlgebraicInteger]:
        return self.field.element(self.a, 0), self.field.element(self.b, self.c)

    def is_unit_ideal(self) -> bool:
        return self.a == 1 and self.c == 1

    def norm(self) -> int:
        """The index [Z[w] : ideal], which the HNF shape makes a*c."""
        return self.a * self.c

    def intersect_base(self) -> int:
        """Positive generator of (ideal intersect Z): the HNF entry a."""
        return self.a

    def contains(self, alpha: AlgebraicInteger) -> bool:
        """Membership: solve the triangular system {a, b+c*w} exactly."""
        if alpha.field != self.field:
            raise FieldMismatch("element belongs to a different field")
        if alpha.y % self.c:
            return False
        t = alpha.y // self.c
        return (alpha.x - t * self.b) % self.a == 0

    def __mul__(self, other: Ideal) -> Ideal:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch("ideals belong to different fields")
        e1, e2 = self.basis()
        f1, f2 = other.basis()
        return Ideal.from_generators(
            self.field, [e1 * f1, e1 * f2, e2 * f1, e2 * f2]
        )

    def __pow__(self, k: int) -> Ideal:
        if k < 0:
            raise ValueError("negative ideal powers are fractional")
        result = Ideal.unit_ideal(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divides(self, other: Ideal) -> bool:
        """True iff other is contained in self (to contain is to divide)."""
        if self.field != other.field:
            raise FieldMismatch("ideals belong to different fields")
        b1, b2 = other.basis()
        return self.contains(b1) and self.contains(b2)

    def conjugate(self) -> Ideal:
        """Image under the Galois involution; preserves the norm."""
        b1, b2 = self.basis()
        return Ideal.from_generators(
            self.field, [b1.conjugate(), b2.conjugate()]
        )

    def hnf(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def to_json_dict(self) -> dict:
        return {"d": self.field.d, "hnf": [self.a, self.b, self.c]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def __str__(self) -> str:
        return f"({self.a}, {self.b}+{self.c}*w)"

    def __repr__(self) -> str:
        return f"Ideal(d={self.field.d}, hnf=({self.a}, {self.b}, {self.c}))"


def ideal_from_json_dict(data: dict) -> Ideal:
    """Rebuild an ideal from {"d": ..., "hnf": [a, b, c]}, rejecting anything
    non-canonical via the Ideal invariant checks."""
    from .field import make_field

    try:
        d = data["d"]
        hnf = data["hnf"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"ideal JSON needs keys 'd' and 'hnf': {data!r}") from exc
    if not (isinstance(d, int) and isinstance(hnf, list) and len(hnf) == 3
            and all(isinstance(v, int) for v in hnf)):
        raise ValueError(f"malformed ideal JSON: {data!r}")
    return Ideal(make_field(d), hnf[0], hnf[1], hnf[2])


def ideal_from_json(text: str) -> Ideal:
    return ideal_from_json_dict(json.loads(text))
