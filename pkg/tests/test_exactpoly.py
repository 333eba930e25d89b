from fractions import Fraction as F

import pytest

from divalg3 import exactpoly as xp


def test_divmod_roundtrip():
    p = xp.trim([1, 0, -3, 2, 5])
    q = xp.trim([2, 1, 1])
    quo, rem = xp.divmod_poly(p, q)
    assert xp.add(xp.mul(quo, q), rem) == p
    assert xp.degree(rem) < xp.degree(q)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        xp.divmod_poly((F(1),), ())


def test_xgcd_bezout():
    a = xp.trim([-1, 0, 1])        # x² - 1
    b = xp.trim([1, 2, 1])         # (x+1)²
    g, u, v = xp.xgcd(a, b)
    assert xp.add(xp.mul(u, a), xp.mul(v, b)) == g
    # gcd is a multiple of x + 1
    _, rem = xp.divmod_poly(g, xp.trim([1, 1]))
    assert rem == ()


def test_eval_and_derivative():
    p = xp.trim([13, -13, 0, 1])   # x³ - 13x + 13
    assert xp.evaluate(p, 0) == 13
    assert xp.evaluate(p, 2) == F(-5)
    assert xp.derivative(p) == xp.trim([-13, 0, 3])


def test_sturm_count_known_roots():
    # (x-1)(x-2)(x-3)
    p = xp.trim([-6, 11, -6, 1])
    chain = xp.sturm_chain(p)
    assert xp.count_roots(chain, F(0), F(4)) == 3
    assert xp.count_roots(chain, F(0), F(3, 2)) == 1
    assert xp.count_roots(chain, F(5), F(9)) == 0


def test_sturm_counts_distinct_roots_with_multiplicity():
    # (x-1)²(x+2): distinct roots 1 and -2
    p = xp.mul(xp.mul((F(-1), F(1)), (F(-1), F(1))), (F(2), F(1)))
    chain = xp.sturm_chain(p)
    assert xp.count_roots(chain, F(-3), F(3)) == 2


def test_isolation_example_cubic():
    p = xp.trim([13, -13, 0, 1])
    ivs = xp.isolate_real_roots(p)
    assert len(ivs) == 3
    chain = xp.sturm_chain(p)
    for lo, hi in ivs:
        assert lo < hi
        assert xp.count_roots(chain, lo, hi) == 1
    # intervals are disjoint and ordered
    for (a, b), (c, d) in zip(ivs, ivs[1:]):
        assert b <= c


def test_isolation_against_float_roots():
    import numpy as np

    p = xp.trim([13, -13, 0, 1])
    float_roots = sorted(np.roots([1, 0, -13, 13]).real)
    ivs = xp.isolate_real_roots(p)
    for (lo, hi), r in zip(ivs, float_roots):
        assert float(lo) <= r <= float(hi)


def test_refine_to_sign_matches_float():
    import numpy as np

    host = xp.trim([13, -13, 0, 1])
    target = xp.trim([-1, 1])  # x - 1
    float_roots = sorted(np.roots([1, 0, -13, 13]).real)
    for iv, r in zip(xp.isolate_real_roots(host), float_roots):
        s = xp.refine_to_sign(target, host, iv)
        assert s == (1 if r > 1 else -1)


def test_no_real_roots():
    p = xp.trim([1, 0, 1])  # x² + 1
    assert xp.isolate_real_roots(p) == []
