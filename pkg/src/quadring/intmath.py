"""Exact rational-integer helpers: gcd chains, primality, factoring, square roots mod p.

All routines use arbitrary-precision ints; nothing here touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import NotPrime

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Below this, roots mod p are found by exhaustive scan; above, Tonelli-Shanks.
EXHAUSTIVE_ROOT_LIMIT = 10**4


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for the magnitudes this package handles."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not a rational prime")


def factorint(n: int) -> dict[int, int]:
    """Factor n > 0 by trial division, shortcutting once the cofactor is prime."""
    if n <= 0:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        if is_prime(n):
            break
        if n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        else:
            # wheel over 6k +- 1
            f += 2 if f % 6 == 5 else 4
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) for an odd prime p via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    ls = pow(a, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod prime p, or None if a is a non-residue.

    Exhaustive scan below EXHAUSTIVE_ROOT_LIMIT keeps the small-p path trivially
    auditable; Tonelli-Shanks covers the rest.
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if p < EXHAUSTIVE_ROOT_LIMIT:
        for x in range(p):
            if x * x % p == a:
                return x
        return None
    if legendre_symbol(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)

    # Tonelli-Shanks: write p-1 = q * 2^s with q odd.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        i = 1
        t2i = t * t % p
        while i < m and t2i != 1:
            t2i = t2i * t2i % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def is_squarefree(n: int) -> bool:
    """Trial-divide |n| up to its square root looking for a repeated factor."""
    n = abs(n)
    if n == 0:
        return False
    if n % 4 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 2
    return True


def sqrt_upper(n: int, digits: int = 12) -> Fraction:
    """A certified rational upper bound on sqrt(n), within 10**-digits of it."""
    scale = 10**digits
    return Fraction(isqrt(n * scale * scale) + 1, scale)


def sqrt_lower(n: int, digits: int = 12) -> Fraction:
    """A certified rational lower bound on sqrt(n)."""
    scale = 10**digits
    return Fraction(isqrt(n * scale * scale), scale)


# pi = 3.14159265358979323846..., so this is a certified lower bound.
PI_LOWER = Fraction(31415926535897932, 10**16)

__all__ = [
    "EXHAUSTIVE_ROOT_LIMIT",
    "PI_LOWER",
    "factorint",
    "gcd",
    "is_prime",
    "is_squarefree",
    "legendre_symbol",
    "require_prime",
    "sqrt_lower",
    "sqrt_mod",
    "sqrt_upper",
    "xgcd",
]
