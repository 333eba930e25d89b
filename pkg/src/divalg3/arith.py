"""Integral structure: prime splitting, the order discriminant, S-rings.

The integral model is the order Z[t] inside M together with the classical
maximal order o_E = Z[w] of E (w = (1+√-d)/2 when -d ≡ 1 mod 4, else √-d);
the composite o_E·{1, t, t²} plays the role of o_L.  Whether Z[t] is maximal
is not decided here; every S-integrality statement is relative to this basis
and the reports say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from . import exactpoly as xp
from .algebra import Algebra, AlgElem, embed, reduced_trace
from .exactlinalg import mat_det
from .heights import rationals_of_height
from .numtower import CubicElem, QuadElem, Tower, TowerElem, norm_L_E, norm_L_M
from .unitary import coord_sort_key, is_in_SU, is_in_U


# ---------------------------------------------------------------------------
# small prime-number helpers (desk scale; trial division is plenty)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int):
    n = abs(n)
    out = set()
    k = 2
    while k * k <= n:
        while n % k == 0:
            out.add(k)
            n //= k
        k += 1
    if n > 1:
        out.add(n)
    return sorted(out)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p: 1, -1, or 0."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def valuation(q: Fraction, p: int) -> int:
    q = Fraction(q)
    if q == 0:
        raise ZeroDivisionError("valuation of zero")
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


# ---------------------------------------------------------------------------
# prime classification


@dataclass
class PrimeClass:
    p: int
    behavior_E: str  # split | inert | ramified
    split_M: str  # split_completely | inert | ramified | partial
    property_A: bool
    property_B: bool
    has_sixth_roots: bool


def field_disc_E(d: int) -> int:
    return -d if (-d) % 4 == 1 else -4 * d


def _roots_mod_p(fpoly, p: int):
    """Distinct roots of the cleared-denominator reduction of f mod p, or None
    if a coefficient denominator vanishes mod p."""
    den = 1
    for c in fpoly:
        den = den * c.denominator // __import__("math").gcd(den, c.denominator)
    if den % p == 0:
        return None
    ints = [int(c * den) % p for c in fpoly]
    return [x for x in range(p) if sum(ci * pow(x, i, p) for i, ci in enumerate(ints)) % p == 0]


def classify_prime(p: int, alg: Algebra) -> PrimeClass:
    """Splitting of p in E and in M, plus the two denominator properties.

    Property A: p odd, inert in E, and f splits into three distinct linear
    factors mod p (then p splits in L into three primes of residue degree 2).
    Property B: p odd, non-split in E, and F_p contains no primitive sixth
    root of unity (equivalently p is not ≡ 1 mod 6).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    tower = alg.tower
    d = tower.d
    disc_E = field_disc_E(d)
    if disc_E % p == 0:
        behavior_E = "ramified"
    elif p == 2:
        # unramified 2: split iff -d ≡ 1 mod 8 (only possible when -d ≡ 1 mod 4)
        behavior_E = "split" if (-d) % 8 == 1 else "inert"
    else:
        behavior_E = "split" if legendre(-d, p) == 1 else "inert"

    disc_f = tower.disc_f
    if valuation(disc_f, p) != 0 or _roots_mod_p(tower.f, p) is None:
        split_M = "ramified"
    else:
        nroots = len(_roots_mod_p(tower.f, p))
        if nroots == 3:
            split_M = "split_completely"
        elif nroots == 0:
            split_M = "inert"
        else:
            split_M = "partial"  # cannot occur for a Galois cubic, kept for safety

    has_sixth = p % 6 == 1
    property_A = p != 2 and behavior_E == "inert" and split_M == "split_completely"
    property_B = p != 2 and behavior_E in ("inert", "ramified") and not has_sixth
    return PrimeClass(p, behavior_E, split_M, property_A, property_B, has_sixth)


def primes_with_property_A(alg: Algebra, limit: int):
    return [p for p in range(3, limit) if is_prime(p) and classify_prime(p, alg).property_A]


def primes_with_property_B(alg: Algebra, limit: int):
    return [p for p in range(3, limit) if is_prime(p) and classify_prime(p, alg).property_B]


# ---------------------------------------------------------------------------
# o_E integral basis and S-integrality


def omega(d: int) -> QuadElem:
    """Second element of the integral basis {1, w} of o_E."""
    if (-d) % 4 == 1:
        return QuadElem(d, Fraction(1, 2), Fraction(1, 2))
    return QuadElem(d, 0, 1)


def quad_integral_coords(x: QuadElem):
    """Coordinates (u, v) of x = u + v·w in the integral basis of o_E."""
    if (-x.d) % 4 == 1:
        v = 2 * x.x1
        return (x.x0 - x.x1, v)
    return (x.x0, x.x1)


def quad_from_integral_coords(d: int, u, v) -> QuadElem:
    w = omega(d)
    return QuadElem(d, u) + Fraction(v) * w


def tower_integral_coords(x: TowerElem):
    """Six coordinates of x in the model basis {1, t, t²} ⊗ {1, w}."""
    out = []
    for j in range(3):
        q = QuadElem(x.tower.d, x.re.c[j], x.im.c[j])
        out.extend(quad_integral_coords(q))
    return tuple(out)


@dataclass(frozen=True)
class SRing:
    """The subring of Q in which exactly the primes of S are invertible."""

    primes: tuple

    def __post_init__(self):
        ps = tuple(sorted(set(int(p) for p in self.primes)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    def contains(self, q) -> bool:
        q = Fraction(q)
        return all(p in self.primes for p in prime_factors(q.denominator))


def s_integral(x, s: SRing) -> bool:
    """S-integrality of coordinates taken in the integral model basis."""
    if isinstance(x, QuadElem):
        coords = quad_integral_coords(x)
    elif isinstance(x, TowerElem):
        coords = tower_integral_coords(x)
    elif isinstance(x, (int, Fraction)):
        coords = (Fraction(x),)
    else:
        raise TypeError(f"cannot test S-integrality of {type(x).__name__}")
    return all(s.contains(c) for c in coords)


# ---------------------------------------------------------------------------
# order discriminant


@dataclass
class OrderBasis:
    """Three elements of L forming an o_E-basis of the integral model."""

    e: tuple  # three TowerElem

    def __post_init__(self):
        if len(self.e) != 3:
            raise ValueError("need exactly three basis elements")

    def is_rho_stable(self) -> bool:
        s = set(self.e)
        return {x.rho(1) for x in s} == s


def standard_basis(tower: Tower) -> OrderBasis:
    th = tower.theta
    return OrderBasis((tower.one, th, th * th))


def normal_basis(tower: Tower) -> Optional[OrderBasis]:
    """A rho-stable basis {e, rho(e), rho²(e)} if one of the obvious choices works."""
    for cand in (tower.theta * tower.theta, tower.one + tower.theta,
                 tower.one + tower.theta + tower.theta * tower.theta):
        e = (cand, cand.rho(1), cand.rho(2))
        rows = [[x.re.c[j] for x in e] for j in range(3)]
        if mat_det(rows, Fraction(0), Fraction(1)) != 0:
            return OrderBasis(tuple(e))
    return None


def disc_basis(basis: OrderBasis) -> QuadElem:
    """det(Tr_L/E(e_j·e_k)) — discriminant of the basis over o_E."""
    e = basis.e
    t = e[0].tower
    rows = []
    for x in e:
        row = []
        for y in e:
            m = x * y
            row.append((m + m.rho(1) + m.rho(2)).quad_part())
        rows.append(row)
    return mat_det(rows, QuadElem(t.d, 0), QuadElem(t.d, 1))


def discriminant_lambda(alg: Algebra, basis: OrderBasis) -> QuadElem:
    """Exact 9x9 discriminant det(Tr_rd(b_jk·b_j'k')) for b_jk = e_j·z^k.

    When the basis is rho-stable as a set the closed form
    (-a²·disc_basis)³ must agree, and this is asserted.
    """
    t = alg.tower
    gens = []
    for k in range(3):
        for e in basis.e:
            coords = [t.zero, t.zero, t.zero]
            coords[k] = e
            gens.append(AlgElem(alg, tuple(coords)))
    rows = []
    for x in gens:
        rows.append([reduced_trace(x * y) for y in gens])
    disc = mat_det(rows, QuadElem(t.d, 0), QuadElem(t.d, 1))
    if basis.is_rho_stable():
        a = alg.a
        expected = (-(a * a) * disc_basis(basis)) ** 3
        assert disc == expected, "block closed form disagrees with the 9x9 determinant"
    return disc


@dataclass
class MaximalOrderReport:
    a_integral: bool
    norm_a: Fraction
    is_maximal: Optional[bool]  # None when a is not integral

    def __bool__(self) -> bool:
        return bool(self.is_maximal)


def maximal_order_check(alg: Algebra) -> MaximalOrderReport:
    """The order o_L + o_L·z + o_L·z² is maximal iff a is a unit of o_E."""
    u, v = quad_integral_coords(alg.a)
    integral = u.denominator == 1 and v.denominator == 1
    n = alg.a.norm()
    if not integral:
        return MaximalOrderReport(False, n, None)
    return MaximalOrderReport(True, n, abs(n) == 1)


# ---------------------------------------------------------------------------
# denominator restrictions and the S-scans


@dataclass
class DenominatorReport:
    denominator_primes: tuple
    property_B_primes: tuple
    in_U: bool
    violation: bool


def denominator_admissible(x: AlgElem, alg: Algebra) -> DenominatorReport:
    """Denominator primes of a conjugation-action-fixed element of U.

    Requires all coordinates in E and b rational.  A member of U whose
    coordinates have a denominator prime with Property B (and v_p(b) = 0)
    would contradict the denominator restriction; such primes are flagged.
    """
    if not all(l.is_in_E() for l in x.l):
        raise ValueError("coordinates must lie in E")
    if not alg.b.is_rational():
        raise ValueError("the denominator criterion requires b in Q")
    b = alg.b.rational_part()
    dens = set()
    for l in x.l:
        for c in quad_integral_coords(l.quad_part()):
            dens.update(prime_factors(Fraction(c).denominator))
    dens = tuple(sorted(dens))
    bad = tuple(
        p for p in dens
        if classify_prime(p, alg).property_B and valuation(b, p) == 0
    )
    in_u = is_in_U(x)
    return DenominatorReport(dens, bad, in_u, in_u and bool(bad))


def _s_ring_values(height: int, s: SRing):
    return rationals_of_height(height, s.primes)


def _require_scan_primes(alg: Algebra, s: SRing, prop: str):
    b = alg.b
    for p in s.primes:
        pc = classify_prime(p, alg)
        if prop == "A" and not pc.property_A:
            raise ValueError(f"prime {p} does not satisfy Property A for this tower")
        if prop == "B" and not pc.property_B:
            raise ValueError(f"prime {p} does not satisfy Property B for this field")
        if not b.is_rational():
            # v_p extends to M only through the rational subfield here
            raise ValueError("scans require b in Q so that v_p(b) is defined")
        if valuation(b.rational_part(), p) != 0:
            raise ValueError(f"v_{p}(b) must be 0 for the scan hypotheses")


def s_monomial_scan(alg: Algebra, s: SRing, height: int):
    """Monomial members of SU with S-integral l of bounded height.

    Enumerates l over the o_L(S) model with all six coordinates of height at
    most `height` and keeps those with N_L/M(l) = 1 = N_L/E(l); the expected
    result is exactly the third roots of unity contained in E.
    """
    _require_scan_primes(alg, s, "A")
    t = alg.tower
    vals = _s_ring_values(height, s)
    half = t.half_basis
    d = Fraction(t.d)
    hits = []
    one_m = t.cubic(1)
    one_e = QuadElem(t.d, 1)
    # pre-split each o_E(S) coordinate pair into (x0, x1) parts of u + v·w
    pairs = []
    for u, v in product(vals, repeat=2):
        if half:
            pairs.append((u + v / 2, v / 2))
        else:
            pairs.append((Fraction(u), Fraction(v)))
    for c0, c1, c2 in product(pairs, repeat=3):
        re = t.cubic(c0[0], c1[0], c2[0])
        im = t.cubic(c0[1], c1[1], c2[1])
        if re.is_zero() and im.is_zero():
            continue
        if re * re + d * (im * im) != one_m:  # N_L/M in two cubic products
            continue
        l = TowerElem(re, im)
        if norm_L_E(l) != one_e:
            continue
        hits.append(l)
    return sorted(hits, key=lambda x: tuple(x.re.c) + tuple(x.im.c))


def rho_fixed_su_scan(alg: Algebra, s: SRing, height: int, norm_one: bool = True):
    """Members of SU (or U) with all three coordinates in o_E(S), bounded height.

    Coordinates are pairs over the integral basis {1, w} of o_E with entries
    S-integral of height <= height.  Condition (1) of the membership system is
    rational for such triples, so the first coordinate is recovered from the
    other two by exact lookup; survivors get the full membership test.
    """
    _require_scan_primes(alg, s, "B")
    t = alg.tower
    if not alg.b.is_rational():
        raise ValueError("this scan requires b in Q")
    b = alg.b.rational_part()
    vals = _s_ring_values(height, s)
    cands = []
    table = {}
    for u, v in product(vals, repeat=2):
        q = quad_from_integral_coords(t.d, u, v)
        cands.append(q)
        table.setdefault(q.norm(), []).append(q)

    out = []
    for q1 in cands:
        n1 = b * q1.norm()
        for q2 in cands:
            needed = 1 - n1 - b * b * q2.norm()
            for q0 in table.get(needed, ()):
                g = AlgElem(alg, (t.from_quad(q0), t.from_quad(q1), t.from_quad(q2)))
                if norm_one:
                    if is_in_SU(g):
                        out.append(g)
                elif is_in_U(g):
                    out.append(g)
    return sorted(out, key=coord_sort_key)
