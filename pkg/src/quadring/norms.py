"""The relative ideal norm down to Z and the extension map in the other direction.

The norm of an ideal A is computed from its definition: multiply the Galois
conjugates of A together and intersect with Z, returning the positive
generator. Multiplicativity and the norm of an extended ideal being a square
are theorems about this definition, checked by the test suite and the CLI
`verify` subcommand rather than assumed.
"""
from __future__ import annotations

from .errors import NonPositive
from .field import QuadraticField
from .ideals import Ideal
from .splitting import PrimeIdealFactor


def relative_norm(A: Ideal) -> int:
    """Positive generator of (A * conjugate(A)) intersect Z."""
    return (A * A.conjugate()).intersect_base()


def extend_ideal(field: QuadraticField, m: int) -> Ideal:
    """m*Z[w], the image of the ideal m*Z under the inclusion of Z."""
    if m < 1:
        raise NonPositive(f"extension needs a positive integer, got {m}")
    return Ideal.principal(field.element(m, 0))


def check_extension_norm(field: QuadraticField, a: int) -> bool:
    """Whether the norm of the extended ideal a*Z[w] equals a**degree.

    Always true; exposed as an operation so the identity can be demonstrated
    on demand for any a.
    """
    if a < 1:
        raise NonPositive(f"extension needs a positive integer, got {a}")
    return relative_norm(extend_ideal(field, a)) == a**field.degree


def residue_degree(P: PrimeIdealFactor) -> int:
    """f with |Z[w]/P| = p**f; the relative norm of P is p**f as well."""
    return P.f
