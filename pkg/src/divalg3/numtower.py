"""Exact arithmetic in the tower Q ⊂ E = Q(√-d), Q ⊂ M = Q[t]/(f), L = M(√-d).

d is a positive squarefree integer and f a monic rational cubic that is
irreducible with square discriminant, so M/Q is cyclic of degree 3 and
L = M·E is abelian of degree 6 over Q.  The Galois group is generated by

  * tau  - conjugation √-d -> -√-d, fixing M,
  * rho  - the order-3 automorphism t -> g(t) of M, extended to L fixing E,

and tau*rho has order 6.  Elements are represented exactly:

  QuadElem   x0 + x1·√-d            (x0, x1 rational)
  CubicElem  c0 + c1·t + c2·t²      (ci rational, reduced mod f)
  TowerElem  re + im·√-d            (re, im CubicElem)

All values are immutable; every operation is a pure function, so elements
may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import exactpoly as xp

Q0 = Fraction(0)
Q1 = Fraction(1)


class SubfieldError(ValueError):
    """Raised when an element does not lie in the subfield an operation needs."""


def _sqrt_exact(q: Fraction) -> Optional[Fraction]:
    """Exact rational square root, or None if q is not a square."""
    if q < 0:
        return None
    ns = _isqrt_exact(q.numerator)
    if ns is None:
        return None
    ds = _isqrt_exact(q.denominator)
    if ds is None:
        return None
    return Fraction(ns, ds)


def _isqrt_exact(n: int) -> Optional[int]:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def is_squarefree(n: int) -> bool:
    if n <= 0:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        while n % k == 0:
            n //= k
        k += 1
    return True


# ---------------------------------------------------------------------------
# E = Q(√-d)


class QuadElem:
    """x0 + x1·√-d in the imaginary quadratic field Q(√-d)."""

    __slots__ = ("d", "x0", "x1")

    def __init__(self, d: int, x0, x1=0):
        self.d = int(d)
        self.x0 = Fraction(x0)
        self.x1 = Fraction(x1)

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError("mixed quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.d, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.d, self.x0 + o.x0, self.x1 + o.x1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.d, self.x0 - o.x0, self.x1 - o.x1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadElem(self.d, -self.x0, -self.x1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.d,
            self.x0 * o.x0 - self.d * self.x1 * o.x1,
            self.x0 * o.x1 + self.x1 * o.x0,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.d, self.x0, -self.x1)

    def norm(self) -> Fraction:
        """N_{E/Q}: x0² + d·x1²."""
        return self.x0 * self.x0 + self.d * self.x1 * self.x1

    def inv(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadElem(self.d, self.x0 / n, -self.x1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = QuadElem(self.d, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QuadElem) else other
        if o is None or not isinstance(o, QuadElem):
            return NotImplemented
        return self.d == o.d and self.x0 == o.x0 and self.x1 == o.x1

    def __hash__(self):
        return hash((self.d, self.x0, self.x1))

    def is_rational(self) -> bool:
        return self.x1 == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise SubfieldError(f"{self!r} is not rational")
        return self.x0

    def __repr__(self):
        return f"QuadElem(d={self.d}, {self.x0} + {self.x1}*s)"


def zeta3(d: int = 3) -> QuadElem:
    """The primitive third root of unity (-1+√-3)/2; only exists for d = 3."""
    if d != 3:
        raise ValueError("third roots of unity live in Q(√-3) only")
    return QuadElem(3, Fraction(-1, 2), Fraction(1, 2))


# ---------------------------------------------------------------------------
# parameters and validation


@dataclass(frozen=True)
class TowerParams:
    """d, the cubic f (c0, c1, c2 for X³+c2X²+c1X+c0), and the action g."""

    d: int
    f: tuple
    g: tuple

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(Fraction(c) for c in self.f))
        object.__setattr__(self, "g", tuple(Fraction(c) for c in self.g))


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def __repr__(self):
        return "ValidationReport(ok)" if self.ok else f"ValidationReport({self.failures})"


def _monic_cubic(fc) -> xp.Poly:
    c0, c1, c2 = (Fraction(c) for c in fc)
    return (c0, c1, c2, Q1)


def cubic_disc(fc) -> Fraction:
    """Discriminant of X³ + c2·X² + c1·X + c0."""
    c0, c1, c2 = (Fraction(c) for c in fc)
    return (
        18 * c2 * c1 * c0
        - 4 * c2**3 * c0
        + c2**2 * c1**2
        - 4 * c1**3
        - 27 * c0**2
    )


def _has_rational_root(fpoly: xp.Poly) -> bool:
    from math import gcd

    den = 1
    for c in fpoly:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fpoly]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return True
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            for sgn in (1, -1):
                if xp.evaluate(fpoly, Fraction(sgn * p, q)) == 0:
                    return True
    return False


def _divisors(n: int):
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def _compose_mod(g: xp.Poly, h: xp.Poly, f: xp.Poly) -> xp.Poly:
    """g(h) reduced mod f."""
    acc: xp.Poly = ()
    for c in reversed(g):
        acc = xp.add(xp.mul(acc, h), (c,))
        _, acc = xp.divmod_poly(acc, f)
    return acc


def derive_action(fc) -> tuple:
    """Coefficients of a generator t -> g(t) of the cubic Galois action.

    Solves the quadratic cofactor f(X)/(X-t) over M in closed form using the
    exact square root of disc(f).  Requires disc(f) to be a rational square.
    """
    disc = cubic_disc(fc)
    s = _sqrt_exact(disc)
    if s is None or s == 0:
        raise ValueError("discriminant is not a nonzero rational square; action undefined")
    f = _monic_cubic(fc)
    c2 = Fraction(fc[2])
    # other roots of f: (-(t + c2) ± s/f'(t)) / 2
    fprime = xp.derivative(f)
    g_inv, u, _ = xp.xgcd(fprime, f)
    if xp.degree(g_inv) != 0:
        raise ValueError("f is not separable")
    inv_fprime = xp.scale(u, 1 / g_inv[0])
    term = xp.scale(inv_fprime, s)
    base = xp.neg(xp.add((c2,), (Q0, Q1)))
    _, g = xp.divmod_poly(xp.scale(xp.add(base, term), Fraction(1, 2)), f)
    out = list(g) + [Q0] * (3 - len(g))
    return tuple(out[:3])


def tower_validate(params: TowerParams) -> ValidationReport:
    """Check every structural requirement; one failure entry per broken rule."""
    rep = ValidationReport()
    if params.d <= 0 or not is_squarefree(params.d):
        rep.fail(f"d = {params.d} is not a positive squarefree integer")
    f = _monic_cubic(params.f)
    if _has_rational_root(f):
        rep.fail("f has a rational root, hence is reducible over Q")
    disc = cubic_disc(params.f)
    if disc == 0:
        rep.fail("disc(f) = 0: f is not separable")
    elif _sqrt_exact(disc) is None:
        rep.fail(f"disc(f) = {disc} is not a rational square, so M/Q is not cyclic")
    g = xp.trim(params.g)
    if xp.degree(g) > 2:
        rep.fail("action polynomial has degree > 2")
        return rep
    fg = _compose_mod(f, g, f)
    if fg:
        rep.fail("g(t) is not a root of f: the action is not an automorphism")
        return rep
    ident: xp.Poly = (Q0, Q1)
    if g == ident:
        rep.fail("action is the identity, not of order 3")
        return rep
    gg = _compose_mod(g, g, f)
    ggg = _compose_mod(gg, g, f)
    if ggg != ident:
        rep.fail("action does not have order 3")
    return rep


# ---------------------------------------------------------------------------
# tower context and element classes


class Tower:
    """Validated arithmetic context for the sextic field L and its subfields."""

    def __init__(self, params: TowerParams, check: bool = True):
        if check:
            rep = tower_validate(params)
            if not rep.ok:
                raise ValueError(f"invalid tower parameters: {rep.failures}")
        self.params = params
        self.d = params.d
        self.f = _monic_cubic(params.f)
        self.g = xp.trim(params.g)
        self.disc_f = cubic_disc(params.f)
        self.key = (params.d, params.f, params.g)
        # reduction of t³ and t⁴ modulo f
        c0, c1, c2 = params.f
        t3 = (-c0, -c1, -c2)
        t4 = self._reduce4((Q0, t3[0], t3[1], t3[2]))
        self._t3, self._t4 = t3, t4
        # rho as a 3x3 matrix on coefficient columns: columns rho(1), rho(t), rho(t²)
        gt = list(self.g) + [Q0] * (3 - len(self.g))
        _, g2 = xp.divmod_poly(xp.mul(self.g, self.g), self.f)
        gt2 = list(g2) + [Q0] * (3 - len(g2))
        self.rho_mat = (
            (Q1, gt[0], gt2[0]),
            (Q0, gt[1], gt2[1]),
            (Q0, gt[2], gt2[2]),
        )
        # integral basis of o_E: {1, w} with w = (1+√-d)/2 iff -d ≡ 1 mod 4
        self.half_basis = (-self.d) % 4 == 1
        self._root_intervals = None

    def _reduce4(self, c4poly):
        # c4poly has degree ≤ 3 as (p0,p1,p2,p3); substitute t³
        p0, p1, p2, p3 = c4poly
        t3 = (-self.params.f[0], -self.params.f[1], -self.params.f[2])
        return (p0 + p3 * t3[0], p1 + p3 * t3[1], p2 + p3 * t3[2])

    # element constructors -------------------------------------------------

    def cubic(self, c0, c1=0, c2=0) -> "CubicElem":
        return CubicElem(self, (Fraction(c0), Fraction(c1), Fraction(c2)))

    def elem(self, re, im=None) -> "TowerElem":
        if isinstance(re, (int, Fraction)):
            re = self.cubic(re)
        if im is None:
            im = self.cubic(0)
        elif isinstance(im, (int, Fraction)):
            im = self.cubic(im)
        return TowerElem(re, im)

    def from_quad(self, q: QuadElem) -> "TowerElem":
        if q.d != self.d:
            raise ValueError("quadratic element from a different field")
        return self.elem(self.cubic(q.x0), self.cubic(q.x1))

    @property
    def zero(self) -> "TowerElem":
        return self.elem(0)

    @property
    def one(self) -> "TowerElem":
        return self.elem(1)

    @property
    def theta(self) -> "TowerElem":
        return self.elem(self.cubic(0, 1))

    @property
    def sqrt_minus_d(self) -> "TowerElem":
        return self.elem(self.cubic(0), self.cubic(1))

    def quad(self, x0, x1=0) -> QuadElem:
        return QuadElem(self.d, x0, x1)

    # real-place data -------------------------------------------------------

    def root_intervals(self):
        """Isolating rational intervals for the three real roots of f."""
        if self._root_intervals is None:
            self._root_intervals = xp.isolate_real_roots(self.f)
        return self._root_intervals

    def __repr__(self):
        return f"Tower(d={self.d}, f={self.params.f}, g={self.params.g})"


class CubicElem:
    """c0 + c1·t + c2·t² in the cyclic cubic field M = Q[t]/(f)."""

    __slots__ = ("tower", "c")

    def __init__(self, tower: Tower, coeffs):
        self.tower = tower
        self.c = tuple(Fraction(x) for x in coeffs)

    def _coerce(self, other):
        if isinstance(other, CubicElem):
            if other.tower.key != self.tower.key:
                raise ValueError("mixed towers")
            return other
        if isinstance(other, (int, Fraction)):
            return CubicElem(self.tower, (Fraction(other), Q0, Q0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CubicElem(self.tower, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CubicElem(self.tower, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CubicElem(self.tower, tuple(-a for a in self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2 = self.c
        b0, b1, b2 = o.c
        p0 = a0 * b0
        p1 = a0 * b1 + a1 * b0
        p2 = a0 * b2 + a1 * b1 + a2 * b0
        p3 = a1 * b2 + a2 * b1
        p4 = a2 * b2
        t3 = self.tower._t3
        t4 = self.tower._t4
        return CubicElem(
            self.tower,
            (
                p0 + p3 * t3[0] + p4 * t4[0],
                p1 + p3 * t3[1] + p4 * t4[1],
                p2 + p3 * t3[2] + p4 * t4[2],
            ),
        )

    __rmul__ = __mul__

    def inv(self) -> "CubicElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = xp.xgcd(xp.trim(self.c), self.tower.f)
        if xp.degree(g) != 0:
            raise ZeroDivisionError("element is not invertible (f reducible?)")
        inv = xp.scale(u, 1 / g[0])
        cs = list(inv) + [Q0] * (3 - len(inv))
        return CubicElem(self.tower, tuple(cs[:3]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = CubicElem(self.tower, (Q1, Q0, Q0))
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def rho(self, times: int = 1) -> "CubicElem":
        out = self
        for _ in range(times % 3):
            m = out.tower.rho_mat
            c0, c1, c2 = out.c
            out = CubicElem(
                out.tower,
                (
                    m[0][0] * c0 + m[0][1] * c1 + m[0][2] * c2,
                    m[1][0] * c0 + m[1][1] * c1 + m[1][2] * c2,
                    m[2][0] * c0 + m[2][1] * c1 + m[2][2] * c2,
                ),
            )
        return out

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise SubfieldError(f"{self!r} is not rational")
        return self.c[0]

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CubicElem) else other
        if o is None or not isinstance(o, CubicElem):
            return NotImplemented
        return self.tower.key == o.tower.key and self.c == o.c

    def __hash__(self):
        return hash((self.c, self.tower.key[0], self.tower.key[1]))

    def __repr__(self):
        return f"CubicElem{self.c}"


class TowerElem:
    """re + im·√-d in the sextic field L, with re, im in the cubic field M."""

    __slots__ = ("re", "im")

    def __init__(self, re: CubicElem, im: CubicElem):
        if re.tower.key != im.tower.key:
            raise ValueError("mixed towers")
        self.re = re
        self.im = im

    @property
    def tower(self) -> Tower:
        return self.re.tower

    def _coerce(self, other):
        if isinstance(other, TowerElem):
            if other.tower.key != self.tower.key:
                raise ValueError("mixed towers")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.elem(other)
        if isinstance(other, CubicElem):
            return TowerElem(other, other.tower.cubic(0))
        if isinstance(other, QuadElem):
            return self.tower.from_quad(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerElem(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerElem(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return TowerElem(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.tower.d
        return TowerElem(
            self.re * o.re - d * (self.im * o.im),
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "TowerElem":
        """tau: √-d -> -√-d."""
        return TowerElem(self.re, -self.im)

    def rho(self, times: int = 1) -> "TowerElem":
        return TowerElem(self.re.rho(times), self.im.rho(times))

    def inv(self) -> "TowerElem":
        n = self.re * self.re + self.tower.d * (self.im * self.im)
        # n = x·tau(x) lies in the totally real field M, so n = 0 forces x = 0
        w = n.inv()
        return TowerElem(self.re * w, -(self.im * w))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc = self.tower.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_in_M(self) -> bool:
        return self.im.is_zero()

    def is_in_E(self) -> bool:
        return self.re.is_rational() and self.im.is_rational()

    def is_rational(self) -> bool:
        return self.is_in_M() and self.re.is_rational()

    def cubic_part(self) -> CubicElem:
        if not self.is_in_M():
            raise SubfieldError(f"{self!r} is not in the cubic subfield")
        return self.re

    def quad_part(self) -> QuadElem:
        if not self.is_in_E():
            raise SubfieldError(f"{self!r} is not in the quadratic subfield")
        return QuadElem(self.tower.d, self.re.c[0], self.im.c[0])

    def rational_part(self) -> Fraction:
        return self.cubic_part().rational_part()

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, TowerElem) else other
        if o is None or not isinstance(o, TowerElem):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"TowerElem({self.re!r} + {self.im!r}*s)"


# ---------------------------------------------------------------------------
# Galois action dispatcher

_GALOIS_WORDS = ("id", "tau", "rho", "rho2", "rho_tau", "rho2_tau")


def galois(x: TowerElem, elt: str) -> TowerElem:
    """Apply a named element of the C6 Galois group of L/Q."""
    if elt not in _GALOIS_WORDS:
        raise ValueError(f"unknown Galois element {elt!r}; choose from {_GALOIS_WORDS}")
    out = x
    if elt.endswith("tau") and elt != "tau":
        out = out.conj()
    elif elt == "tau":
        return x.conj()
    if elt.startswith("rho2"):
        out = out.rho(2)
    elif elt.startswith("rho"):
        out = out.rho(1)
    return out


def tau(x: TowerElem) -> TowerElem:
    return x.conj()


def rho(x, times: int = 1):
    return x.rho(times)


# ---------------------------------------------------------------------------
# norms and traces


def norm_L_E(x: TowerElem) -> QuadElem:
    """x · rho(x) · rho²(x), always landing in E."""
    n = x * x.rho(1) * x.rho(2)
    return n.quad_part()


def norm_L_M(x: TowerElem) -> CubicElem:
    """x · tau(x), always landing in M."""
    return (x * x.conj()).cubic_part()


def norm_M_F(x) -> Fraction:
    """Norm of the cubic field: product of the three real conjugates."""
    if isinstance(x, TowerElem):
        x = x.cubic_part()
    n = x * x.rho(1) * x.rho(2)
    return n.rational_part()


def norm_E_F(x) -> Fraction:
    if isinstance(x, TowerElem):
        x = x.quad_part()
    return x.norm()


def trace_L_E(x: TowerElem) -> QuadElem:
    return (x + x.rho(1) + x.rho(2)).quad_part()


# ---------------------------------------------------------------------------
# total positivity via exact root isolation


def is_totally_positive(b: CubicElem) -> bool:
    """True iff b is positive at every real root of f.  Exact; b = 0 is False."""
    if b.is_zero():
        return False
    if b.is_rational():
        return b.c[0] > 0
    tower = b.tower
    target = xp.trim(b.c)
    for interval in tower.root_intervals():
        if xp.refine_to_sign(target, tower.f, interval) <= 0:
            return False
    return True
