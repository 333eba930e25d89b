"""Exact univariate polynomial arithmetic over Q, plus Sturm-chain root isolation.

Polynomials are tuples of Fractions in ascending order, (c0, c1, ..., cn);
the zero polynomial is the empty tuple.  Everything here is exact: no floats
anywhere, intervals have rational endpoints.
"""

from __future__ import annotations

from fractions import Fraction

Poly = tuple


def trim(coeffs) -> Poly:
    """Drop trailing zeros and normalise coefficients to Fraction."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, s) -> Poly:
    s = Fraction(s)
    if s == 0:
        return ()
    return tuple(c * s for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly):
    """Euclidean division p = m*q + r with deg r < deg q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    dq = degree(q)
    lead = q[-1]
    while len(rem) - 1 >= dq and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lead
        quo[shift] += factor
        for i in range(len(q)):
            rem[shift + i] -= factor * q[i]
        rem.pop()
    return trim(quo), trim(rem)


def xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g (g not normalised)."""
    r0, r1 = trim(a), trim(b)
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1))
        v0, v1 = v1, sub(v0, mul(q, v1))
    return r0, u0, v0


def evaluate(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def sturm_chain(p: Poly):
    """Canonical Sturm chain; counts distinct real roots of p on an interval."""
    chain = [trim(p)]
    d = derivative(p)
    if d:
        chain.append(d)
        while degree(chain[-1]) > 0:
            _, r = divmod_poly(chain[-2], chain[-1])
            if not r:
                break
            chain.append(neg(r))
    return chain


def _variations(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def variations_at(chain, x) -> int:
    return _variations([_sign(evaluate(p, x)) for p in chain])


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def count_roots(chain, lo, hi) -> int:
    """Distinct real roots of chain[0] in (lo, hi]; endpoints must not be roots."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def root_bound(p: Poly) -> Fraction:
    """Strict bound B with every real root of p in (-B, B) (Cauchy bound)."""
    lead = p[-1]
    return 1 + max(abs(c / lead) for c in p)


def isolate_real_roots(p: Poly):
    """Disjoint rational intervals (lo, hi), each containing exactly one real root.

    Endpoints never hit a root.  Intervals are returned in increasing order.
    """
    p = trim(p)
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    bound = root_bound(p)
    lo, hi = -bound, bound

    out = []

    def split(lo, hi, n):
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while evaluate(p, mid) == 0:
            mid = (lo + mid) / 2
        split(lo, mid, count_roots(chain, lo, mid))
        split(mid, hi, count_roots(chain, mid, hi))

    split(lo, hi, count_roots(chain, lo, hi))
    return out


def refine_to_sign(target: Poly, host: Poly, interval):
    """Sign of target at the unique root of host inside interval.

    Requires gcd(target, host) = 1 so the value at the root is nonzero.
    Bisects the isolating interval until target has no root inside it, then
    reads the (constant) sign at the midpoint.  All arithmetic is rational.
    """
    target = trim(target)
    if not target:
        raise ValueError("target vanishes identically")
    host_chain = sturm_chain(host)
    t_chain = sturm_chain(target)
    lo, hi = interval
    while True:
        if (
            evaluate(target, lo) != 0
            and evaluate(target, hi) != 0
            and count_roots(t_chain, lo, hi) == 0
        ):
            return _sign(evaluate(target, lo))
        mid = (lo + hi) / 2
        while evaluate(host, mid) == 0:
            mid = (lo + mid) / 2
        if count_roots(host_chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
