"""Seeded random elements and ideals for verification sweeps.

Everything is driven by a caller-supplied random.Random so identical seeds
reproduce identical sweeps.
"""
from __future__ import annotations

from random import Random

from .field import AlgebraicInteger, QuadraticField
from .ideals import Ideal

COORD_RANGE = 9


def random_element(field: QuadraticField, rng: Random) -> AlgebraicInteger:
    """A nonzero element with small coordinates."""
    while True:
        x = rng.randint(-COORD_RANGE, COORD_RANGE)
        y = rng.randint(-COORD_RANGE, COORD_RANGE)
        if x or y:
            return field.element(x, y)


def random_ideal(field: QuadraticField, rng: Random, max_norm: int = 10**6) -> Ideal:
    """A product of random principal ideals with norm capped at max_norm."""
    A = Ideal.principal(random_element(field, rng))
    while A.norm() > max_norm:
        A = Ideal.principal(random_element(field, rng))
    for _ in range(rng.randint(0, 2)):
        B = A * Ideal.principal(random_element(field, rng))
        if B.norm() > max_norm:
            break
        A = B
    return A
