"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the package's own algorithms: element
arithmetic is re-derived in the (1, sqrt(d)) basis with exact rationals,
ideal HNF triples come from enumerating lattice combinations, and prime
splitting is read off from exhaustive enumeration of index-p modules.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt

import pytest

from quadring import AlgebraicInteger, QuadraticField, make_field

# Fields exercised throughout: both omega kinds, both signs, one non-UFD.
TEST_DS = (2, 3, -1, -3, 5, -5, 10)


@pytest.fixture(params=TEST_DS, ids=lambda d: f"d={d}")
def field(request) -> QuadraticField:
    return make_field(request.param)


# ---------------------------------------------------------------------------
# element oracle: exact arithmetic in the (1, sqrt(d)) basis


def to_sqrt_basis(alpha: AlgebraicInteger) -> tuple[Fraction, Fraction]:
    """(u, v) with alpha = u + v*sqrt(d), exact rationals."""
    x, y = Fraction(alpha.x), Fraction(alpha.y)
    if alpha.field.d % 4 == 1:
        return x + y / 2, y / 2
    return x, y


def sqrt_basis_mul(d: int, a: tuple[Fraction, Fraction],
                   b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return a[0] * b[0] + d * a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def sqrt_basis_norm(d: int, a: tuple[Fraction, Fraction]) -> Fraction:
    return a[0] * a[0] - d * a[1] * a[1]


def sqrt_basis_conj(a: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return a[0], -a[1]


# ---------------------------------------------------------------------------
# ideal oracle: lattice enumeration


def elem_norm_oracle(d: int, x: int, y: int) -> int:
    if d % 4 == 1:
        return x * x + x * y - y * y * (d - 1) // 4
    return x * x - d * y * y


def omega_mul_oracle(d: int, x1: int, y1: int, x2: int, y2: int) -> tuple[int, int]:
    if d % 4 == 1:
        m = (d - 1) // 4
        return x1 * x2 + m * y1 * y2, x1 * y2 + x2 * y1 + y1 * y2
    return x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1


def lattice_hnf_oracle(d: int, gens: list[tuple[int, int]],
                       coeff_range: int = 40) -> tuple[int, int, int]:
    """Canonical (a, b, c) of the ideal generated by gens, by enumerating
    small integer combinations of {g, g*w}. Only trustworthy when the true
    entries are well inside coeff_range times the generator sizes."""
    rows: list[tuple[int, int]] = []
    for x, y in gens:
        rows.append((x, y))
        rows.append(omega_mul_oracle(d, x, y, 0, 1))
    pts: set[tuple[int, int]] = set()
    span = range(-coeff_range, coeff_range + 1)
    if len(rows) == 2:
        for c1, c2 in product(span, span):
            pts.add((c1 * rows[0][0] + c2 * rows[1][0],
                     c1 * rows[0][1] + c2 * rows[1][1]))
    else:
        small = range(-3, 4)
        for cs in product(small, repeat=len(rows)):
            pts.add((sum(c * r[0] for c, r in zip(cs, rows)),
                     sum(c * r[1] for c, r in zip(cs, rows))))
    a = min(x for x, y in pts if y == 0 and x > 0)
    c = min(y for x, y in pts if y > 0)
    b = min(x for x, y in pts if y == c and 0 <= x)
    return a, b % a, c


# ---------------------------------------------------------------------------
# splitting oracle: enumerate index-p and index-p^2 HNF triples


def hnf_is_valid_oracle(d: int, a: int, b: int, c: int) -> bool:
    return (a > 0 and c > 0 and 0 <= b < a and a % c == 0 and b % c == 0
            and elem_norm_oracle(d, b, c) % (a * c) == 0)


def index_p_primes_oracle(d: int, p: int) -> list[tuple[int, int, int]]:
    """All valid HNF triples of index p. Index a prime forces maximality."""
    out = []
    for a, c in ((p, 1),):  # a*c = p with c | a forces c = 1
        for b in range(a):
            if hnf_is_valid_oracle(d, a, b, c):
                out.append((a, b, c))
    return out


def split_type_oracle(d: int, p: int) -> str:
    """Splitting type of p from nothing but enumeration: the number of
    index-p ideals is 2/1/0 for split/ramified/inert."""
    return {2: "split", 1: "ramified", 0: "inert"}[len(index_p_primes_oracle(d, p))]


def index_p2_primes_oracle(d: int, p: int) -> list[tuple[int, int, int]]:
    """Valid index-p^2 triples that are prime: no index-p triple divides them.
    Divisibility is containment, checked on the two basis vectors."""
    smalls = index_p_primes_oracle(d, p)

    def contains(triple, x, y):
        a, b, c = triple
        return y % c == 0 and (x - (y // c) * b) % a == 0

    out = []
    for a, c in ((p * p, 1), (p, p)):
        for b in range(0, a, c if c > 1 else 1):
            if not hnf_is_valid_oracle(d, a, b, c):
                continue
            divisible = any(
                contains(small, a, 0) and contains(small, b, c)
                for small in smalls
            )
            if not divisible:
                out.append((a, b, c))
    return out


# ---------------------------------------------------------------------------
# plain sieve oracle for the prime stream


def sieve_oracle(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]
