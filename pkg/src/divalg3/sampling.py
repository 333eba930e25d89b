"""Seeded random element generation for property checks.

Everything takes an explicit random.Random so runs replay from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Algebra, AlgElem
from .numtower import Tower, TowerElem
from .unitary import hilbert90_element, is_in_U, monomial_norm_constant
from .numtower import norm_L_M


def random_fraction(rng: random.Random, h: int = 2) -> Fraction:
    return Fraction(rng.randint(-h, h), rng.randint(1, h))


def random_cubic(tower: Tower, rng: random.Random, h: int = 2):
    return tower.cubic(*(random_fraction(rng, h) for _ in range(3)))


def random_tower_elem(tower: Tower, rng: random.Random, h: int = 2) -> TowerElem:
    return TowerElem(random_cubic(tower, rng, h), random_cubic(tower, rng, h))


def random_nonzero_tower_elem(tower: Tower, rng: random.Random, h: int = 2) -> TowerElem:
    while True:
        x = random_tower_elem(tower, rng, h)
        if not x.is_zero():
            return x


def random_alg_elem(alg: Algebra, rng: random.Random, h: int = 2) -> AlgElem:
    return AlgElem(alg, tuple(random_tower_elem(alg.tower, rng, h) for _ in range(3)))


def u_generators(alg: Algebra, rng: random.Random, extra: int = 4):
    """Known members of U: -1, the third roots in E, norm-one parametrised
    elements, and z/z² when their monomial norm equations hold."""
    from .unitary import third_roots_in_E

    gens = [-alg.one] + third_roots_in_E(alg)
    for j in (1, 2):
        coords = [alg.tower.zero] * 3
        coords[j] = alg.tower.one
        g = AlgElem(alg, tuple(coords))
        c = monomial_norm_constant(alg, j)
        if c * norm_L_M(alg.tower.one) == alg.tower.one:
            gens.append(g)
    for _ in range(extra):
        y0 = random_cubic(alg.tower, rng, 2)
        gens.append(alg.alg(hilbert90_element(y0)))
    return gens


def random_u_member(alg: Algebra, rng: random.Random) -> AlgElem:
    """Product of a few known members; stays in U by the group law."""
    gens = u_generators(alg, rng)
    g = alg.one
    for _ in range(rng.randint(1, 4)):
        g = g * rng.choice(gens)
    assert is_in_U(g)
    return g
