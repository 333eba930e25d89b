"""Exhaustive triple-loop kernels over the table-backed finite rings.

Two interchangeable backends compute identical results:

  * numba @njit kernels (default) for the hot q^6 loops;
  * pure-numpy kernels, selected by setting DIVALG3_PURE_NUMPY=1 in the
    environment (or automatically when numba is unavailable).

Both count the solutions of the homogeneous membership system

    l0*T(l0) + b*l1*T(l1) + b²*l2*T(l2) = 0
    a*T(l0)*l2 + b*T(l1)*l0 + b²*T(l2)*l1 = 0

over all (l0, l1, l2) in R³, where R is either the quadratic extension of
F_q (T = Frobenius conjugation) or the dual-number ring over F_q (T negates
the nilpotent part).  "Nontrivial" means nonzero for the field case and
nonzero mod pi for the dual case; the first few nontrivial solutions are
recorded for the report.

benchmarks/bench_ffverify.py compares the two backends head to head.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "DIVALG3_PURE_NUMPY"

_want_numba = os.environ.get(ENV_FLAG, "") != "1"
if _want_numba:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - environment without numba
        HAVE_NUMBA = False
else:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _precompute_modp(field, a: int, b: int):
    """Per-element arrays shared by both backends (field case)."""
    q = field.q
    ADD, MUL, NEG, r = field.add, field.mul, field.neg, field.r
    qq = q * q
    e = np.arange(qq, dtype=np.int64)
    ex = e % q
    ey = e // q
    ney = NEG[ey]
    nrm = ADD[MUL[ex, ex], NEG[MUL[r, MUL[ey, ey]]]]
    b2 = int(MUL[b, b])
    ax, ay = field.pair(a)
    # a * conj(e), b * conj(e), b² * conj(e) as (x, y) component arrays
    a0x = ADD[MUL[ax, ex], MUL[r, MUL[ay, ney]]]
    a0y = ADD[MUL[ax, ney], MUL[ay, ex]]
    b1x = MUL[b, ex]
    b1y = MUL[b, ney]
    b2x = MUL[b2, ex]
    b2y = MUL[b2, ney]
    n1 = MUL[b, nrm]
    n2 = MUL[b2, nrm]
    return ex, ey, nrm, n1, n2, a0x, a0y, b1x, b1y, b2x, b2y


def _precompute_dual(ring, a: int, b: int):
    q = ring.q
    ADD, MUL, NEG = ring.add, ring.mul, ring.neg
    qq = q * q
    e = np.arange(qq, dtype=np.int64)
    ex = e % q
    ey = e // q
    ney = NEG[ey]
    nrm = MUL[ex, ex]  # e·conj(e) = x² in the dual ring
    b2 = int(MUL[b, b])
    ax, ay = ring.pair(a)
    a0x = MUL[ax, ex]
    a0y = ADD[MUL[ax, ney], MUL[ay, ex]]
    b1x = MUL[b, ex]
    b1y = MUL[b, ney]
    b2x = MUL[b2, ex]
    b2y = MUL[b2, ney]
    n1 = MUL[b, nrm]
    n2 = MUL[b2, nrm]
    return ex, ey, nrm, n1, n2, a0x, a0y, b1x, b1y, b2x, b2y


# ---------------------------------------------------------------------------
# numba backend

if HAVE_NUMBA:

    @njit(cache=True)
    def _triple_loop_numba(ADD, MUL, r, dual, ex, ey, nrm, n1, n2,
                           a0x, a0y, b1x, b1y, b2x, b2y, q, cap):
        qq = q * q
        total = 0
        ntr = 0
        rec = np.zeros((cap, 3), dtype=np.int64)
        for e0 in range(qq):
            v0 = nrm[e0]
            p0x = a0x[e0]
            p0y = a0y[e0]
            x0 = ex[e0]
            y0 = ey[e0]
            triv0 = (x0 == 0) if dual else (e0 == 0)
            for e1 in range(qq):
                s01 = ADD[v0, n1[e1]]
                q1x = b1x[e1]
                q1y = b1y[e1]
                x1 = ex[e1]
                y1 = ey[e1]
                triv01 = triv0 and ((x1 == 0) if dual else (e1 == 0))
                for e2 in range(qq):
                    if ADD[s01, n2[e2]] != 0:
                        continue
                    x2 = ex[e2]
                    y2 = ey[e2]
                    # t1 = a*conj(l0) * l2
                    if dual:
                        t1x = MUL[p0x, x2]
                        t1y = ADD[MUL[p0x, y2], MUL[p0y, x2]]
                        t2x = MUL[q1x, x0]
                        t2y = ADD[MUL[q1x, y0], MUL[q1y, x0]]
                        t3x = MUL[b2x[e2], x1]
                        t3y = ADD[MUL[b2x[e2], y1], MUL[b2y[e2], x1]]
                    else:
                        t1x = ADD[MUL[p0x, x2], MUL[r, MUL[p0y, y2]]]
                        t1y = ADD[MUL[p0x, y2], MUL[p0y, x2]]
                        t2x = ADD[MUL[q1x, x0], MUL[r, MUL[q1y, y0]]]
                        t2y = ADD[MUL[q1x, y0], MUL[q1y, x0]]
                        t3x = ADD[MUL[b2x[e2], x1], MUL[r, MUL[b2y[e2], y1]]]
                        t3y = ADD[MUL[b2x[e2], y1], MUL[b2y[e2], x1]]
                    if ADD[ADD[t1x, t2x], t3x] != 0:
                        continue
                    if ADD[ADD[t1y, t2y], t3y] != 0:
                        continue
                    total += 1
                    trivial = triv01 and ((x2 == 0) if dual else (e2 == 0))
                    if not trivial:
                        if ntr < cap:
                            rec[ntr, 0] = e0
                            rec[ntr, 1] = e1
                            rec[ntr, 2] = e2
                        ntr += 1
        return total, ntr, rec


# ---------------------------------------------------------------------------
# numpy backend


def _triple_loop_numpy(ADD, MUL, r, dual, ex, ey, nrm, n1, n2,
                       a0x, a0y, b1x, b1y, b2x, b2y, q, cap):
    qq = q * q
    total = 0
    ntr = 0
    rec = np.zeros((cap, 3), dtype=np.int64)
    # eq1 residual over the (e0, e1) grid, finished off per e2
    eq1_grid = ADD[nrm[:, None], n1[None, :]]

    def mul_ext(px, py, xx, yy):
        if dual:
            return MUL[px, xx], ADD[MUL[px, yy], MUL[py, xx]]
        return (
            ADD[MUL[px, xx], MUL[r, MUL[py, yy]]],
            ADD[MUL[px, yy], MUL[py, xx]],
        )

    for e2 in range(qq):
        i0, i1 = np.nonzero(ADD[eq1_grid, n2[e2]] == 0)
        if i0.size == 0:
            continue
        x2, y2 = int(ex[e2]), int(ey[e2])
        t1x, t1y = mul_ext(a0x[i0], a0y[i0], x2, y2)
        t2x, t2y = mul_ext(b1x[i1], b1y[i1], ex[i0], ey[i0])
        t3x, t3y = mul_ext(
            np.full(i0.shape, b2x[e2], dtype=np.int64),
            np.full(i0.shape, b2y[e2], dtype=np.int64),
            ex[i1], ey[i1],
        )
        ok = (ADD[ADD[t1x, t2x], t3x] == 0) & (ADD[ADD[t1y, t2y], t3y] == 0)
        sols0, sols1 = i0[ok], i1[ok]
        total += int(ok.sum())
        if dual:
            nontriv = (ex[sols0] != 0) | (ex[sols1] != 0) | (x2 != 0)
        else:
            nontriv = (sols0 != 0) | (sols1 != 0) | (e2 != 0)
        bad0, bad1 = sols0[nontriv], sols1[nontriv]
        for k in range(bad0.size):
            if ntr < cap:
                rec[ntr] = (bad0[k], bad1[k], e2)
            ntr += 1
    return total, ntr, rec


# ---------------------------------------------------------------------------
# dispatch


def count_solutions(ring, a: int, b: int, dual: bool, cap: int = 32,
                    backend: str = None):
    """(total, nontrivial, records) over all coordinate triples of the ring.

    backend overrides the module default ('numba' or 'numpy'); requesting
    numba without it installed raises.
    """
    pre = _precompute_dual(ring, a, b) if dual else _precompute_modp(ring, a, b)
    r = 0 if dual else ring.r
    chosen = backend or BACKEND
    if chosen == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        fn = _triple_loop_numba
    elif chosen == "numpy":
        fn = _triple_loop_numpy
    else:
        raise ValueError(f"unknown backend {chosen!r}")
    total, ntr, rec = fn(ring.add, ring.mul, r, dual, *pre, ring.q, cap)
    return int(total), int(ntr), rec[: min(ntr, cap)]
