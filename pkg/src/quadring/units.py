"""Unit groups, associate testing, imaginary class numbers and the UFD decision.

Imaginary fields have finite cyclic unit groups; real fields have a fundamental
unit found by minimal-y search over the norm form. Class numbers are computed
for imaginary fields by counting reduced primitive binary quadratic forms of
the field discriminant; real fields are decided UFD-or-not through the
Minkowski bound plus an exact principality test for the finitely many small
prime ideals, with the fundamental unit turning the generator search into a
terminating decision procedure.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .errors import FieldMismatch, NotImaginary, SearchExhausted, ZeroElement
from .field import AlgebraicInteger, OmegaKind, QuadraticField
from .ideals import Ideal
from .intmath import PI_LOWER, is_prime, sqrt_upper
from .splitting import split_prime

UNIT_SEARCH_Y_CAP = 10**7
GENERATOR_ITER_CAP = 1 << 20


class UnitGroupKind(Enum):
    FINITE_CYCLIC = "finite_cyclic"
    INFINITE_RANK_ONE = "infinite_rank_one"


@dataclass(frozen=True)
class UnitGroupInfo:
    """Shape of the unit group: finite cyclic of order `torsion_order` for
    d < 0, infinite of rank one with a fundamental unit for d > 0."""

    kind: UnitGroupKind
    torsion_order: int
    fundamental_unit: AlgebraicInteger | None

    def __str__(self) -> str:
        if self.kind is UnitGroupKind.FINITE_CYCLIC:
            return f"finite-cyclic w={self.torsion_order}"
        return f"infinite-rank-one fundamental_unit={self.fundamental_unit}"


def _norm_form_solutions(field: QuadraticField, y: int, n: int) -> list[int]:
    """All integer x with |N(x + y*w)| = n, for fixed y and n >= 1."""
    xs: set[int] = set()
    d = field.d
    if field.omega_kind is OmegaKind.SQRT_D:
        # x**2 = d*y**2 +- n
        for t in (n, -n):
            s2 = d * y * y + t
            if s2 >= 0:
                s = isqrt(s2)
                if s * s == s2:
                    xs.update((s, -s))
    else:
        # (2x + y)**2 = d*y**2 +- 4n
        for t in (n, -n):
            s2 = d * y * y + 4 * t
            if s2 >= 0:
                s = isqrt(s2)
                if s * s == s2:
                    for sg in (s, -s):
                        if (sg - y) % 2 == 0:
                            xs.add((sg - y) // 2)
    return sorted(xs)


def _embeds_above_one(field: QuadraticField, x: int, y: int) -> bool:
    """Exact test for x + y*w > 1 under the real embedding w > 0; needs y > 0."""
    if field.omega_kind is OmegaKind.SQRT_D:
        rhs = 1 - x
    else:
        rhs = 2 - 2 * x - y
    if rhs <= 0:
        return True
    return field.d * y * y > rhs * rhs


def unit_group(field: QuadraticField) -> UnitGroupInfo:
    """Unit group of Z[w]: torsion only (d < 0) or rank one (d > 0).

    The real case scans y = 1, 2, ... for norm-form solutions and returns the
    least solution exceeding 1 in the real embedding, which is the fundamental
    unit because powers of it have strictly growing y.
    """
    if field.d < 0:
        w = {-1: 4, -3: 6}.get(field.d, 2)
        return UnitGroupInfo(UnitGroupKind.FINITE_CYCLIC, w, None)
    for y in range(1, UNIT_SEARCH_Y_CAP + 1):
        best = None
        for x in _norm_form_solutions(field, y, 1):
            if _embeds_above_one(field, x, y):
                best = x
                break
        if best is not None:
            return UnitGroupInfo(
                UnitGroupKind.INFINITE_RANK_ONE, 2, field.element(best, y)
            )
    raise SearchExhausted(
        f"no unit with 0 < y <= {UNIT_SEARCH_Y_CAP} for d={field.d}"
    )


def are_associate(alpha: AlgebraicInteger, beta: AlgebraicInteger) -> bool:
    """Whether beta = u * alpha for a unit u, by exact division.

    beta/alpha = beta * conjugate(alpha) / N(alpha); integrality plus a unit
    norm decides associateness with no unit enumeration, even when the unit
    group is infinite.
    """
    if alpha.field != beta.field:
        raise FieldMismatch("elements belong to different fields")
    if alpha.is_zero() or beta.is_zero():
        raise ZeroElement("associateness is defined for nonzero elements")
    na = alpha.norm()
    if abs(na) != abs(beta.norm()):
        return False
    g = beta * alpha.conjugate()
    if g.x % na or g.y % na:
        return False
    return alpha.field.element(g.x // na, g.y // na).is_unit()


def class_number_imaginary(field: QuadraticField) -> int:
    """Count of reduced primitive forms (A, B, C) of discriminant D < 0:
    B**2 - 4AC = D, |B| <= A <= C, B >= 0 when |B| = A or A = C, gcd 1."""
    if field.d > 0:
        raise NotImaginary(f"d={field.d} is a real field")
    D = field.D
    h = 0
    A = 1
    while 3 * A * A <= -D:
        for B in range(-A, A + 1):
            if (B - D) % 2:
                continue
            if (B * B - D) % (4 * A):
                continue
            C = (B * B - D) // (4 * A)
            if C < A:
                continue
            if B < 0 and (-B == A or A == C):
                continue
            if gcd(gcd(A, abs(B)), C) != 1:
                continue
            h += 1
        A += 1
    return h


def minkowski_bound(field: QuadraticField) -> Fraction:
    """Certified rational upper bound on the Minkowski constant:
    sqrt(D)/2 for real fields, 2*sqrt(|D|)/pi for imaginary ones."""
    if field.d > 0:
        return sqrt_upper(field.D) / 2
    return 2 * sqrt_upper(-field.D) / PI_LOWER


def _real_generator_y_bound(A_norm: int, field: QuadraticField,
                            fundamental_unit: AlgebraicInteger) -> int:
    # A generator of norm n, scaled by units into [sqrt(n), u*sqrt(n)), has
    # |y| < sqrt(n)*(u + 1)/sqrt(D); over-approximate every term with integers.
    u = fundamental_unit
    u_hi = u.x + u.y * (isqrt(field.d) + 1)
    return ((isqrt(A_norm) + 1) * (u_hi + 1)) // isqrt(field.D) + 1


def find_element_of_norm(
    A: Ideal,
    n: int,
    fundamental_unit: AlgebraicInteger | None = None,
) -> AlgebraicInteger | None:
    """Canonical element of A with |N| = n: least |y|, then least x >= 0,
    preferring y > 0 on ties. Returns None when provably no such element exists.

    Imaginary fields bound y by the norm-form ellipse. Real fields need the
    fundamental unit to bound the search; without it, absence cannot be proved
    and the scan raises SearchExhausted at the iteration cap.
    """
    field = A.field
    decisive = True
    if field.d < 0:
        budget = 4 * n if field.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D else n
        y_max = isqrt(budget // -field.d)
    elif fundamental_unit is not None:
        y_max = _real_generator_y_bound(n, field, fundamental_unit)
    else:
        y_max = GENERATOR_ITER_CAP + 1
        decisive = False
    for y0 in range(0, y_max + 1):
        if y0 > GENERATOR_ITER_CAP:
            raise SearchExhausted(f"generator search for {A} passed the cap")
        members = []
        for y in ((0,) if y0 == 0 else (y0, -y0)):
            for x in _norm_form_solutions(field, y, n):
                if x >= 0 and A.contains(field.element(x, y)):
                    members.append((x, y))
        if members:
            members.sort(key=lambda t: (t[0], -t[1]))
            return field.element(*members[0])
    if decisive:
        return None
    raise SearchExhausted(f"generator search for {A} passed the cap")


def principal_generator(A: Ideal) -> AlgebraicInteger | None:
    """Canonical generator of A if principal, else None."""
    fu = unit_group(A.field).fundamental_unit if A.field.d > 0 else None
    return find_element_of_norm(A, A.norm(), fu)


def is_ufd(field: QuadraticField) -> bool:
    """Whether Z[w] has unique factorization (equivalently, class number 1).

    Imaginary: count reduced forms. Real: trivially true when the Minkowski
    bound is below 2; otherwise every prime ideal of norm within the bound
    must be principal.
    """
    if field.d < 0:
        return class_number_imaginary(field) == 1
    bound = minkowski_bound(field)
    if bound < 2:
        return True
    fu = unit_group(field).fundamental_unit
    limit = int(bound)
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        for P, _ in split_prime(field, p).factors:
            if P.ideal.norm() <= limit:
                if find_element_of_norm(P.ideal, P.ideal.norm(), fu) is None:
                    return False
    return True
