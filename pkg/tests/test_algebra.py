import random
from fractions import Fraction as F

import pytest

from divalg3.algebra import (
    Algebra,
    AlgElem,
    algebra_validate,
    definiteness_check,
    embed,
    involution_alpha,
    involution_beta,
    matrix_involution_ext,
    reduced_norm,
    reduced_trace,
    zero_divisor_scan,
)
from divalg3.numtower import QuadElem, zeta3
from divalg3.sampling import random_alg_elem, random_cubic, random_tower_elem


def test_validate_example(alg):
    assert algebra_validate(alg).ok
    assert definiteness_check(alg)


def test_validate_rejects_rational_a(tower):
    bad = Algebra(tower, QuadElem(3, 2), tower.cubic(2), check=False)
    rep = algebra_validate(bad)
    assert not rep.ok


def test_validate_rejects_broken_norm_equation(tower):
    bad = Algebra(tower, zeta3(), tower.cubic(-1), check=False)
    rep = algebra_validate(bad)
    assert any("norm equation" in msg for msg in rep.failures)


def test_z_cubed_is_a(alg):
    assert alg.z ** 3 == alg.alg(alg.a)


def test_z_commutation_rule(alg, tower):
    rng = random.Random(3)
    for _ in range(5):
        l = random_tower_elem(tower, rng)
        lhs = alg.z * alg.alg(l)
        rhs = AlgElem(alg, (tower.zero, l.rho(1), tower.zero))
        assert lhs == rhs


def test_embed_unit_and_z(alg, tower):
    m = embed(alg.one)
    for i in range(3):
        for j in range(3):
            assert m.rows[i][j] == (tower.one if i == j else tower.zero)
    mz = embed(alg.z)
    a = tower.from_quad(alg.a)
    assert mz.rows[0][1] == tower.one and mz.rows[1][2] == tower.one
    assert mz.rows[2][0] == a
    for i, j in ((0, 0), (0, 2), (1, 0), (1, 1), (2, 1), (2, 2)):
        assert mz.rows[i][j] == tower.zero


def test_embed_ring_homomorphism(alg):
    rng = random.Random(5)
    for _ in range(8):
        x = random_alg_elem(alg, rng)
        y = random_alg_elem(alg, rng)
        assert embed(x * y) == embed(x) * embed(y)
        assert embed(x + y) == embed(x) + embed(y)


def test_reduced_norm_examples(alg):
    assert reduced_norm(alg.one) == QuadElem(3, 1)
    assert reduced_norm(alg.z) == alg.a
    rng = random.Random(9)
    for _ in range(8):
        x = random_alg_elem(alg, rng)
        y = random_alg_elem(alg, rng)
        assert reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y)


def test_reduced_norm_is_determinant(alg, tower):
    rng = random.Random(15)
    for _ in range(8):
        x = random_alg_elem(alg, rng)
        assert tower.from_quad(reduced_norm(x)) == embed(x).det()


def test_reduced_trace(alg, tower):
    rng = random.Random(21)
    assert reduced_trace(alg.one) == QuadElem(3, 3)
    for _ in range(5):
        l = random_tower_elem(tower, rng)
        assert reduced_trace(AlgElem(alg, (tower.zero, l, tower.zero))) == QuadElem(3, 0)
        assert reduced_trace(AlgElem(alg, (tower.zero, tower.zero, l))) == QuadElem(3, 0)
        x = random_alg_elem(alg, rng)
        assert tower.from_quad(reduced_trace(x)) == embed(x).trace()


def test_inverse(alg, tower):
    assert alg.one.inv() == alg.one
    assert alg.z.inv() == alg.alg(0, 0, tower.from_quad(alg.a.inv()))
    rng = random.Random(27)
    for _ in range(5):
        x = random_alg_elem(alg, rng)
        assert x * x.inv() == alg.one
        assert x.inv() * x == alg.one
    with pytest.raises(ZeroDivisionError):
        alg.zero.inv()


def test_alpha_restriction_and_z_image(alg, tower):
    rng = random.Random(33)
    for _ in range(5):
        l = random_tower_elem(tower, rng)
        assert involution_alpha(alg.alg(l)) == alg.alg(l.conj())
    assert involution_alpha(alg.z) == alg.alg(0, 0, alg.b_over_a)


def test_alpha_is_second_kind_involution(alg):
    rng = random.Random(39)
    for _ in range(8):
        x = random_alg_elem(alg, rng)
        y = random_alg_elem(alg, rng)
        assert involution_alpha(involution_alpha(x)) == x
        assert involution_alpha(x * y) == involution_alpha(y) * involution_alpha(x)
        assert reduced_norm(involution_alpha(x)) == reduced_norm(x).conj()


def test_beta_conjugated_involution(alg, tower):
    rng = random.Random(45)
    x = random_alg_elem(alg, rng)
    assert involution_beta(x, tower.cubic(1)) == involution_alpha(x)
    for _ in range(4):
        c = random_cubic(tower, rng)
        if c.is_zero():
            continue
        y = random_alg_elem(alg, rng)
        assert involution_beta(involution_beta(y, c), c) == y
        # beta(z) = c⁻¹·rho²(c)·alpha(z)
        expected = alg.alg(tower.elem(c.inv() * c.rho(2))) * involution_alpha(alg.z)
        assert involution_beta(alg.z, c) == expected
    with pytest.raises(ZeroDivisionError):
        involution_beta(x, tower.cubic(0))


def test_matrix_involution_extension(alg):
    rng = random.Random(51)
    ident = embed(alg.one)
    assert matrix_involution_ext(ident, alg) == ident
    for _ in range(5):
        x = random_alg_elem(alg, rng)
        m = embed(x)
        assert matrix_involution_ext(m, alg) == embed(involution_alpha(x))
        assert matrix_involution_ext(matrix_involution_ext(m, alg), alg) == m


def test_zero_divisor_scan_division_case(alg):
    assert zero_divisor_scan(alg, 2) == []
    assert zero_divisor_scan(alg, 0) == []


def test_zero_divisor_scan_split_case(tower):
    # a = 1 makes z³ = 1, so 1 - z kills 1 + z + z²; the scan must notice
    split = Algebra(tower, QuadElem(3, 1), tower.cubic(1), check=False)
    hits = zero_divisor_scan(split, 1)
    assert hits
    one_minus_z = split.alg(1, -1)
    assert one_minus_z in hits
    assert (one_minus_z * split.alg(1, 1, 1)).is_zero()


def test_mixed_algebra_rejected(alg, alg_d7):
    with pytest.raises(ValueError):
        alg.one + alg_d7.one
