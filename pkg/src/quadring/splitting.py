"""Prime splitting and ideal factorization.

A rational prime p factors in Z[w] according to the Kronecker symbol of the
field discriminant: ramified (p | D), split (symbol 1) or inert (symbol -1).
The prime ideals above p come from the roots of the minimal polynomial of w
mod p (x**2 - d, or x**2 - x - (d-1)/4), which applies unconditionally here
because Z[w] is the full ring of integers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import FieldMismatch, UnsupportedField
from .field import OmegaKind, QuadraticField
from .ideals import Ideal
from .intmath import (
    EXHAUSTIVE_ROOT_LIMIT,
    factorint,
    legendre_symbol,
    require_prime,
    sqrt_mod,
)

# Trial division keeps factoring instant up to here.
MAX_FACTOR_NORM = 10**12


@dataclass(frozen=True)
class PrimeIdealFactor:
    """A prime ideal with its residue prime p, ramification index e and
    residue degree f; the norm is p**f and e*f*(primes above p) = 2."""

    ideal: Ideal
    p: int
    e: int
    f: int

    def __str__(self) -> str:
        return f"{self.ideal} p={self.p} e={self.e} f={self.f}"

    def to_json_dict(self, exponent: int | None = None) -> dict:
        data = {"p": self.p, "hnf": list(self.ideal.hnf()), "e": self.e, "f": self.f}
        if exponent is not None:
            data["exp"] = exponent
        return data


@dataclass(frozen=True)
class Factorization:
    """Sorted prime factorization of an ideal: (factor, exponent) pairs,
    ascending in p then in the HNF entry b, so equal ideals factor to equal lists."""

    ideal: Ideal
    factors: tuple[tuple[PrimeIdealFactor, int], ...]

    def product(self) -> Ideal:
        result = Ideal.unit_ideal(self.ideal.field)
        for factor, k in self.factors:
            result = result * factor.ideal**k
        return result

    def to_json_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_json_dict(),
            "factors": [f.to_json_dict(exponent=k) for f, k in self.factors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def __str__(self) -> str:
        if not self.factors:
            return "(1)"
        return " * ".join(
            str(f.ideal) if k == 1 else f"{f.ideal}^{k}" for f, k in self.factors
        )


def kronecker_symbol(D: int, p: int) -> int:
    """(D|p): the Legendre symbol for odd p; at p=2, 0 for even D, +1 for
    D = +-1 (mod 8), -1 otherwise."""
    require_prime(p)
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    return legendre_symbol(D, p)


def _omega_minpoly_roots(field: QuadraticField, p: int) -> list[int]:
    """Distinct roots mod p of the minimal polynomial of w.

    Exhaustive scan for small p (oracle-simple), completed-square formula with
    a modular square root above.
    """
    if field.omega_kind is OmegaKind.SQRT_D:
        poly = lambda r: (r * r - field.d) % p
    else:
        m = field.omega_shift
        poly = lambda r: (r * r - r - m) % p
    if p < EXHAUSTIVE_ROOT_LIMIT:
        roots = []
        for r in range(p):
            if poly(r) == 0:
                roots.append(r)
                if len(roots) == 2:
                    break
        return roots
    if field.omega_kind is OmegaKind.SQRT_D:
        t = sqrt_mod(field.d % p, p)
        if t is None:
            return []
        return sorted({t, (p - t) % p})
    # roots of x**2 - x - m are (1 +- sqrt(d)) / 2 mod p (p odd here: D = d is odd)
    t = sqrt_mod(field.d % p, p)
    if t is None:
        return []
    inv2 = pow(2, -1, p)
    return sorted({(1 + t) * inv2 % p, (1 - t) * inv2 % p})


def _prime_above(field: QuadraticField, p: int, root: int, e: int, f: int) -> PrimeIdealFactor:
    # the prime (p, w - root), stored with second generator s + w, s = -root mod p
    s = (-root) % p
    ideal = Ideal.from_generators(field, [field.element(p, 0), field.element(s, 1)])
    return PrimeIdealFactor(ideal=ideal, p=p, e=e, f=f)


@lru_cache(maxsize=65536)
def split_prime(field: QuadraticField, p: int) -> Factorization:
    """Factor p*Z[w] into prime ideals, in canonical order."""
    require_prime(p)
    extended = Ideal.principal(field.element(p, 0))
    symbol = kronecker_symbol(field.D, p)
    roots = _omega_minpoly_roots(field, p)
    if symbol == 0:
        # ramified: the minimal polynomial has a double root
        assert len(roots) == 1
        factor = _prime_above(field, p, roots[0], e=2, f=1)
        factors = ((factor, 2),)
    elif symbol == 1:
        assert len(roots) == 2
        pair = sorted(
            (_prime_above(field, p, r, e=1, f=1) for r in roots),
            key=lambda q: q.ideal.b,
        )
        factors = ((pair[0], 1), (pair[1], 1))
    else:
        assert not roots
        factors = ((PrimeIdealFactor(ideal=extended, p=p, e=1, f=2), 1),)
    return Factorization(ideal=extended, factors=factors)


def valuation(A: Ideal, P: PrimeIdealFactor) -> int:
    """Largest k with P**k dividing A, by repeated divisibility tests."""
    if A.field != P.ideal.field:
        raise FieldMismatch("ideal and prime belong to different fields")
    k = 0
    power = P.ideal
    while power.divides(A):
        k += 1
        power = power * P.ideal
    return k


def factor_ideal(A: Ideal) -> Factorization:
    """Canonical prime factorization of A; the unit ideal gives the empty product.

    Factors the norm over Z, splits each rational prime, and reads off
    valuations, so the result multiplies back to A exactly.
    """
    factors: list[tuple[PrimeIdealFactor, int]] = []
    if A.norm() > MAX_FACTOR_NORM:
        raise UnsupportedField(
            f"ideal norm {A.norm()} exceeds the factoring cap {MAX_FACTOR_NORM}"
        )
    if not A.is_unit_ideal():
        for p in sorted(factorint(A.norm())):
            for P, _ in split_prime(A.field, p).factors:
                v = valuation(A, P)
                if v:
                    factors.append((P, v))
    return Factorization(ideal=A, factors=tuple(factors))
