import pytest

from divalg3.algebra import Algebra
from divalg3.numtower import Tower, TowerParams, derive_action, zeta3

F_COEFFS = (13, -13, 0)  # X³ - 13X + 13


@pytest.fixture(scope="session")
def tower():
    return Tower(TowerParams(3, F_COEFFS, derive_action(F_COEFFS)))


@pytest.fixture(scope="session")
def alg(tower):
    """d = 3, a = (-1+√-3)/2, b = 1: the worked example configuration."""
    return Algebra(tower, zeta3(), tower.cubic(1))


@pytest.fixture(scope="session")
def alg_d7():
    """d = 7 variant: a = 1+√-7 (norm 8), b = 2 (norm 8); no third roots in E."""
    from divalg3.numtower import QuadElem

    tw = Tower(TowerParams(7, F_COEFFS, derive_action(F_COEFFS)))
    return Algebra(tw, QuadElem(7, 1, 1), tw.cubic(2))
