import random
from fractions import Fraction as F

import pytest

from divalg3.numtower import (
    QuadElem,
    SubfieldError,
    Tower,
    TowerParams,
    cubic_disc,
    derive_action,
    galois,
    is_totally_positive,
    norm_E_F,
    norm_L_E,
    norm_L_M,
    norm_M_F,
    tower_validate,
    trace_L_E,
    zeta3,
)
from divalg3.sampling import random_nonzero_tower_elem, random_tower_elem

G = derive_action((13, -13, 0))


def test_example_discriminant_is_square():
    assert cubic_disc((13, -13, 0)) == 4225 == 65**2


def test_validate_example():
    assert tower_validate(TowerParams(3, (13, -13, 0), G)).ok


def test_validate_identity_action_rejected():
    rep = tower_validate(TowerParams(3, (13, -13, 0), (0, 1, 0)))
    assert not rep.ok
    assert any("identity" in msg for msg in rep.failures)


def test_validate_non_cyclic_cubic_rejected():
    # disc(X³ - 2) = -108, not a square
    rep = tower_validate(TowerParams(3, (-2, 0, 0), (0, 1, 0)))
    assert any("square" in msg for msg in rep.failures)


def test_validate_reducible_cubic_rejected():
    # X³ - X = X(X-1)(X+1)
    rep = tower_validate(TowerParams(3, (0, -1, 0), (0, 1, 0)))
    assert any("reducible" in msg for msg in rep.failures)


def test_validate_bad_d():
    assert not tower_validate(TowerParams(12, (13, -13, 0), G)).ok
    assert not tower_validate(TowerParams(-3, (13, -13, 0), G)).ok


def test_derived_action_is_root_and_order_three(tower):
    th = tower.theta
    # the action sends t to another root of f
    f = lambda x: x**3 - 13 * x + 13
    assert f(th.rho(1)).is_zero()
    assert th.rho(1) != th
    assert th.rho(1).rho(1).rho(1) == th


def test_quad_arithmetic():
    s = QuadElem(3, 0, 1)
    assert s * s == QuadElem(3, -3)
    z = zeta3()
    assert z * z * z == QuadElem(3, 1)
    assert z.conj() == z * z
    assert (z / z) == QuadElem(3, 1)
    with pytest.raises(ZeroDivisionError):
        QuadElem(3, 0).inv()
    with pytest.raises(ValueError):
        QuadElem(3, 1) + QuadElem(7, 1)


def test_cubic_reduction(tower):
    th = tower.cubic(0, 1)
    assert th * th**2 == tower.cubic(-13, 13)   # t³ = 13t - 13


def test_field_axioms_random(tower):
    rng = random.Random(7)
    for _ in range(25):
        x = random_tower_elem(tower, rng)
        y = random_tower_elem(tower, rng)
        z = random_tower_elem(tower, rng)
        assert x + y == y + x
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        nz = random_nonzero_tower_elem(tower, rng)
        assert nz * nz.inv() == tower.one
        assert nz / nz == tower.one


def test_galois_actions(tower):
    s = tower.sqrt_minus_d
    th = tower.theta
    assert galois(s, "tau") == -s
    # E-points are fixed by rho
    e_pt = tower.from_quad(QuadElem(3, F(2, 5), F(-1, 3)))
    assert e_pt.rho(1) == e_pt
    # tau and rho commute; tau² = rho³ = id
    x = th + s
    assert x.conj().rho(1) == x.rho(1).conj()
    assert x.conj().conj() == x
    assert x.rho(1).rho(1).rho(1) == x
    # rho·tau has order exactly 6
    y = x
    seen_identity_early = False
    for k in range(1, 7):
        y = galois(y, "rho_tau")
        if k < 6 and y == x:
            seen_identity_early = True
    assert y == x and not seen_identity_early


def test_galois_dispatcher_words(tower):
    x = tower.theta + tower.sqrt_minus_d
    assert galois(x, "id") == x
    assert galois(x, "rho2") == x.rho(2)
    assert galois(x, "rho2_tau") == x.conj().rho(2)
    with pytest.raises(ValueError):
        galois(x, "sigma")


def test_norms_examples(tower):
    z3 = tower.from_quad(zeta3())
    assert norm_E_F(z3) == 1
    th = tower.theta
    assert norm_M_F(th) == -13          # equals -f(0)
    m = tower.cubic(2, -1, F(1, 2))
    assert norm_L_M(tower.elem(m)) == m * m


def test_norm_multiplicativity_and_fixedness(tower):
    rng = random.Random(11)
    for _ in range(10):
        x = random_tower_elem(tower, rng)
        y = random_tower_elem(tower, rng)
        assert norm_L_E(x * y) == norm_L_E(x) * norm_L_E(y)
        nle = tower.from_quad(norm_L_E(x))
        assert nle.rho(1) == nle
        nlm = tower.elem(norm_L_M(x))
        assert nlm.conj() == nlm


def test_norm_tower_compatibility(tower):
    rng = random.Random(13)
    for _ in range(10):
        x = random_tower_elem(tower, rng)
        assert norm_M_F(norm_L_M(x)) == norm_E_F(norm_L_E(x))


def test_trace_lands_in_E(tower):
    rng = random.Random(17)
    x = random_tower_elem(tower, rng)
    tr = trace_L_E(x)
    assert isinstance(tr, QuadElem)
    assert trace_L_E(x + x) == tr + tr


def test_wrong_subfield_errors(tower):
    x = tower.theta + tower.sqrt_minus_d
    with pytest.raises(SubfieldError):
        norm_M_F(x)
    with pytest.raises(SubfieldError):
        norm_E_F(tower.theta)


def test_totally_positive(tower):
    assert is_totally_positive(tower.cubic(1))
    assert not is_totally_positive(tower.cubic(-1))
    assert not is_totally_positive(tower.cubic(0))
    # f has one negative real root, so t itself is not totally positive
    assert not is_totally_positive(tower.cubic(0, 1))
    th2 = (tower.theta * tower.theta).cubic_part()
    assert is_totally_positive(th2)
    # all roots are > -5
    assert is_totally_positive(tower.cubic(5, 1))


def test_three_real_roots(tower):
    assert len(tower.root_intervals()) == 3


def test_subfield_membership(tower):
    assert tower.one.is_rational()
    assert tower.sqrt_minus_d.is_in_E()
    assert not tower.sqrt_minus_d.is_in_M()
    assert tower.theta.is_in_M()
    assert not tower.theta.is_in_E()
    z3 = tower.from_quad(zeta3())
    assert z3.quad_part() == zeta3()


def test_hash_consistency(tower):
    a = tower.cubic(1, 2, 3)
    b = tower.cubic(1, 2, 3)
    assert a == b and hash(a) == hash(b)
    x = tower.elem(a, b)
    y = tower.elem(b, a)
    assert x == y and hash(x) == hash(y)
