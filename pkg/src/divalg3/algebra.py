"""The cyclic algebra D = L ⊕ Lz ⊕ Lz² with z³ = a and z·l = rho(l)·z.

Elements are coordinate triples (l0, l1, l2) over the sextic field L.  The
algebra embeds into M3(L) by sending l to diag(l, rho(l), rho²(l)) and z to
the cyclic shift with a in the lower-left corner; reduced norm and trace are
determinant and trace under that embedding.

The second-kind involution alpha fixes M pointwise on L (alpha|_L = tau) and
sends z to (b/a)·z², where b solves the norm equation N_E/F(a) = N_M/F(b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .exactlinalg import SingularMatrixError, mat_inverse
from .heights import rationals_of_height
from .numtower import (
    CubicElem,
    QuadElem,
    Tower,
    TowerElem,
    ValidationReport,
    is_totally_positive,
    norm_E_F,
    norm_M_F,
)


class Algebra:
    """Validated description of D: tower, structure constant a, involution constant b."""

    def __init__(self, tower: Tower, a: QuadElem, b: CubicElem,
                 division_asserted: bool = True, check: bool = True):
        self.tower = tower
        self.a = a
        self.b = b
        self.division_asserted = division_asserted
        if check:
            rep = algebra_validate(self)
            if not rep.ok:
                raise ValueError(f"invalid algebra: {rep.failures}")
        # frequently used constants, lifted to L once
        self.a_L = tower.from_quad(a)
        self.b_L = tower.elem(b)
        self.rho_b = tower.elem(b.rho(1))
        self.rho2_b = tower.elem(b.rho(2))
        self.b_over_a = self.b_L / self.a_L if not a.norm() == 0 else None

    @property
    def key(self):
        return (self.tower.key, self.a, tuple(self.b.c))

    def alg(self, l0, l1=None, l2=None) -> "AlgElem":
        t = self.tower
        conv = lambda v: t.elem(v) if isinstance(v, (int, Fraction)) else (
            t.from_quad(v) if isinstance(v, QuadElem) else (
                t.elem(v) if isinstance(v, CubicElem) else v))
        zero = t.zero
        return AlgElem(self, (conv(l0), conv(l1) if l1 is not None else zero,
                              conv(l2) if l2 is not None else zero))

    @property
    def one(self) -> "AlgElem":
        return self.alg(1)

    @property
    def zero(self) -> "AlgElem":
        return self.alg(0)

    @property
    def z(self) -> "AlgElem":
        return self.alg(0, 1)

    def __repr__(self):
        return f"Algebra(d={self.tower.d}, a={self.a!r}, b={self.b!r})"


def algebra_validate(alg: Algebra) -> ValidationReport:
    """Structure-constant checks: a ≠ 0, a outside Q, b ≠ 0, norm equation."""
    rep = ValidationReport()
    a, b = alg.a, alg.b
    if a.norm() == 0:
        rep.fail("a = 0")
    if a.x1 == 0:
        rep.fail("a lies in the ground field Q; it must be in E \\ Q")
    if b.is_zero():
        rep.fail("b = 0")
        return rep
    if norm_E_F(a) != norm_M_F(b):
        rep.fail(f"norm equation fails: N_E/F(a) = {norm_E_F(a)} but N_M/F(b) = {norm_M_F(b)}")
    return rep


def definiteness_check(alg: Algebra) -> bool:
    """The hermitian form is definite at both real places iff b is totally positive."""
    return is_totally_positive(alg.b)


class AlgElem:
    """Element l0 + l1·z + l2·z² of the cyclic algebra."""

    __slots__ = ("algebra", "l")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.l = tuple(coords)
        if len(self.l) != 3:
            raise ValueError("need exactly three coordinates")

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            if other.algebra.key != self.algebra.key:
                raise ValueError("mixed algebras")
            return other
        if isinstance(other, (int, Fraction, QuadElem, CubicElem, TowerElem)):
            return self.algebra.alg(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.algebra, tuple(x + y for x, y in zip(self.l, o.l)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.algebra, tuple(x - y for x, y in zip(self.l, o.l)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgElem(self.algebra, tuple(-x for x in self.l))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a = self.algebra.a_L
        x0, x1, x2 = self.l
        y0, y1, y2 = o.l
        r0, r1, r2 = (y0.rho(1), y1.rho(1), y2.rho(1))
        s0, s1, s2 = (y0.rho(2), y1.rho(2), y2.rho(2))
        return AlgElem(
            self.algebra,
            (
                x0 * y0 + a * (x1 * r2) + a * (x2 * s1),
                x0 * y1 + x1 * r0 + a * (x2 * s2),
                x0 * y2 + x1 * r1 + x2 * s0,
            ),
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = self.algebra.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inv(self) -> "AlgElem":
        """Two-sided inverse via exact row reduction of the matrix image."""
        t = self.algebra.tower
        try:
            inv_rows = mat_inverse(embed(self).rows, t.zero, t.one)
        except SingularMatrixError:
            raise ZeroDivisionError("element has reduced norm 0 (zero or zero divisor)")
        return AlgElem(self.algebra, tuple(inv_rows[0]))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.l)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, AlgElem) else other
        if o is None or not isinstance(o, AlgElem):
            return NotImplemented
        return self.l == o.l

    def __hash__(self):
        return hash(self.l)

    def __repr__(self):
        return f"AlgElem(l0={self.l[0]!r}, l1={self.l[1]!r}, l2={self.l[2]!r})"


class Mat3:
    """3x3 matrix over L; oracle side for the embedding and norm checks."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("need a 3x3 matrix")

    def __add__(self, other):
        return Mat3([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = self.rows[i][0] * other.rows[0][j]
                for k in (1, 2):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Mat3(out)

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def trace(self) -> TowerElem:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def det(self) -> TowerElem:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def __repr__(self):
        return f"Mat3({self.rows!r})"


def embed(x: AlgElem) -> Mat3:
    """Matrix image: rows (l0,l1,l2), (a·r(l2), r(l0), r(l1)), (a·r²(l1), a·r²(l2), r²(l0))."""
    a = x.algebra.a_L
    l0, l1, l2 = x.l
    return Mat3(
        [
            [l0, l1, l2],
            [a * l2.rho(1), l0.rho(1), l1.rho(1)],
            [a * l1.rho(2), a * l2.rho(2), l0.rho(2)],
        ]
    )


def reduced_norm(x: AlgElem) -> QuadElem:
    """N(l0) + a·N(l1) + a²·N(l2) - a·Tr(l0·rho(l1)·rho²(l2)), with N, Tr of L/E."""
    a = x.algebra.a_L
    l0, l1, l2 = x.l
    n0 = l0 * l0.rho(1) * l0.rho(2)
    n1 = l1 * l1.rho(1) * l1.rho(2)
    n2 = l2 * l2.rho(1) * l2.rho(2)
    m = l0 * l1.rho(1) * l2.rho(2)
    tr = m + m.rho(1) + m.rho(2)
    return (n0 + a * n1 + a * a * n2 - a * tr).quad_part()


def reduced_trace(x: AlgElem) -> QuadElem:
    """Trace of the matrix image; only the l0 coordinate contributes."""
    l0 = x.l[0]
    return (l0 + l0.rho(1) + l0.rho(2)).quad_part()


def involution_alpha(x: AlgElem) -> AlgElem:
    """The involution with alpha|_L = tau and alpha(z) = (b/a)·z²."""
    alg = x.algebra
    a = alg.a_L
    l0, l1, l2 = x.l
    c0 = l0.conj()
    c1 = (alg.rho_b * alg.rho2_b * l2.conj()).rho(1) / a
    c2 = (alg.rho_b * l1.conj()).rho(2) / a
    return AlgElem(alg, (c0, c1, c2))


def involution_beta(x: AlgElem, c: CubicElem) -> AlgElem:
    """Conjugated involution d -> c⁻¹·alpha(d)·c for c in M^×."""
    if c.is_zero():
        raise ZeroDivisionError("conjugating element c must be nonzero")
    alg = x.algebra
    c_alg = alg.alg(c)
    return c_alg.inv() * involution_alpha(x) * c_alg


def matrix_involution_ext(m: Mat3, alg: Algebra) -> Mat3:
    """Entrywise extension of alpha from the embedded algebra to all of M3(L)."""
    rb = alg.rho_b
    r2b = alg.rho2_b
    rb_i = rb.inv()
    r2b_i = r2b.inv()
    r = m.rows
    cj = lambda e: e.conj()
    return Mat3(
        [
            [cj(r[0][0]), rb_i * cj(r[1][0]), rb_i * r2b_i * cj(r[2][0])],
            [rb * cj(r[0][1]), cj(r[1][1]), r2b_i * cj(r[2][1])],
            [rb * r2b * cj(r[0][2]), r2b * cj(r[1][2]), cj(r[2][2])],
        ]
    )


def zero_divisor_scan(alg: Algebra, height: int):
    """Search elements with rational coordinates of bounded height for norm 0.

    Returns the (sorted) nonzero triples found; an empty list is consistent
    with, but of course no proof of, D being a division algebra.
    """
    vals = rationals_of_height(height)
    hits = []
    for q0, q1, q2 in product(vals, repeat=3):
        if q0 == 0 and q1 == 0 and q2 == 0:
            continue
        x = alg.alg(q0, q1, q2)
        if reduced_norm(x).norm() == 0:
            hits.append(x)
    return hits
