"""Deterministic bounded-height enumeration of rationals and coordinate tuples.

Height of num/den (reduced, den > 0) means |num| <= h and den <= h; scans
iterate these grids in a fixed sorted order so reports are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product


@lru_cache(maxsize=None)
def rationals_of_height(h: int, s_primes: tuple = None) -> tuple:
    """All reduced rationals with |num| <= h, 0 < den <= h, sorted.

    When s_primes is given, only denominators whose prime factors all lie in
    s_primes are kept (S-integral values).
    """
    if h < 0:
        raise ValueError("height must be >= 0")
    vals = set()
    for den in range(1, h + 1):
        if s_primes is not None and not _supported(den, s_primes):
            continue
        for num in range(-h, h + 1):
            q = Fraction(num, den)
            if abs(q.numerator) <= h and q.denominator <= h:
                vals.add(q)
    if h == 0:
        vals.add(Fraction(0))
    return tuple(sorted(vals))


def _supported(den: int, primes: tuple) -> bool:
    for p in primes:
        while den % p == 0:
            den //= p
    return den == 1


def tuples_of_height(h: int, arity: int, s_primes: tuple = None):
    """Lexicographic product of rationals_of_height over `arity` slots."""
    return product(rationals_of_height(h, s_primes), repeat=arity)


def height_of(q: Fraction) -> int:
    if q == 0:
        return 0
    return max(abs(q.numerator), q.denominator)


def within_height(values, h: int) -> bool:
    return all(height_of(Fraction(v)) <= h for v in values)
