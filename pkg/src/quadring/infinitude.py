"""Streams of prime ideals and the escape construction that defeats any finite list.

Given finitely many prime ideals, each meets Z in one rational prime, so the
rational primes they cover form a finite set; the next uncovered rational prime
splits into fresh prime ideals. Iterating this turns "there are infinitely many
prime ideals" into an executable generator. In the unique-factorization case
the same stream yields pairwise non-associate prime elements.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FieldMismatch, NonPositive, NotUFD
from .field import AlgebraicInteger, QuadraticField
from .splitting import PrimeIdealFactor, split_prime
from .units import find_element_of_norm, is_ufd, unit_group


def rational_prime_stream() -> Iterator[int]:
    """2, 3, 5, ... forever, by an incremental sieve; restarting reproduces
    the identical sequence."""
    composites: dict[int, list[int]] = {}
    n = 2
    while True:
        witnesses = composites.pop(n, None)
        if witnesses is None:
            yield n
            composites[n * n] = [n]
        else:
            for p in witnesses:
                composites.setdefault(n + p, []).append(p)
        n += 1


def prime_ideal_stream(field: QuadraticField) -> Iterator[PrimeIdealFactor]:
    """All prime ideals of Z[w], grouped over ascending rational primes,
    each group in canonical order; emitted ideals are pairwise distinct."""
    for p in rational_prime_stream():
        for factor, _ in split_prime(field, p).factors:
            yield factor


def escape_finite_list(
    field: QuadraticField, known: Iterable[PrimeIdealFactor]
) -> PrimeIdealFactor:
    """A prime ideal different from every listed one.

    Collect the rational primes the list meets Z in, take the smallest prime
    outside that set (the base ring has infinitely many, so one exists) and
    return the first prime ideal above it.
    """
    known = list(known)
    covered = set()
    for P in known:
        if P.ideal.field != field:
            raise FieldMismatch("listed prime belongs to a different field")
        covered.add(P.ideal.intersect_base())
    for p in rational_prime_stream():
        if p not in covered:
            fresh = split_prime(field, p).factors[0][0]
            break
    assert all(fresh.ideal != P.ideal for P in known)
    return fresh


def nonassociate_prime_elements(
    field: QuadraticField, count: int
) -> list[AlgebraicInteger]:
    """The first `count` prime elements in stream order, pairwise non-associate.

    Requires unique factorization. Inert primes are their own generators;
    split and ramified prime ideals get the canonical element of absolute
    norm p found by the bounded norm-form search.
    """
    if count < 1:
        raise NonPositive(f"count must be positive, got {count}")
    if not is_ufd(field):
        raise NotUFD(f"Z[w] for d={field.d} has class number > 1")
    fu = unit_group(field).fundamental_unit if field.d > 0 else None
    out: list[AlgebraicInteger] = []
    for P in prime_ideal_stream(field):
        if P.f == 2:
            out.append(field.element(P.p, 0))
        else:
            gen = find_element_of_norm(P.ideal, P.p, fu)
            assert gen is not None  # class number 1 guarantees a generator
            out.append(gen)
        if len(out) == count:
            return out
    raise AssertionError("unreachable: the prime ideal stream never ends")
