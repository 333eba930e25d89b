"""Table-backed finite fields F_{p^n}, their quadratic extensions, and dual numbers.

F_{p^n} elements are encoded as integers 0..q-1 (base-p digit encoding of the
polynomial representative); arithmetic goes through dense q×q numpy tables so
the exhaustive kernels are pure integer array code.  The quadratic extension
F_{q²} = F_q[s]/(s²-r) (r a non-residue) encodes x + y·s as x + q·y; the dual
ring F_q[pi]/(pi²) uses the same pair encoding with pi² = 0.

Conjugation is x -> x^q on the quadratic extension (so (x, y) -> (x, -y)) and
pi -> -pi on the dual ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

DEFAULT_CELL_LIMIT = 10**9  # cap on q^6, the size of the exhaustive triple loop


class SizeLimitExceeded(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# -- polynomial helpers over F_p (coefficient lists, ascending) -------------


def _pmul(a, b, p, h):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, p, h)


def _pmod(a, p, h):
    a = list(a)
    dh = len(h) - 1
    while len(a) > dh:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dh
            for i in range(len(h)):
                a[shift + i] = (a[shift + i] - lead * h[i]) % p
        a.pop()
    while len(a) < dh:
        a.append(0)
    return [x % p for x in a]


def _is_irreducible(h, p: int) -> bool:
    """Trial division by all monic polynomials of degree <= n/2 (desk scale)."""
    n = len(h) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for enc in range(p**d):
            g = [(enc // p**i) % p for i in range(d)] + [1]
            if not any(_pmod(list(h), p, g)):
                return False
    return True


def _find_irreducible(p: int, n: int):
    """Smallest monic irreducible of degree n over F_p (by digit encoding)."""
    if n == 1:
        return [0, 1]
    for enc in range(p**n):
        coeffs = [(enc // p**i) % p for i in range(n)] + [1]
        if _is_irreducible(coeffs, p):
            return coeffs
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def _base_tables(p: int, n: int, modulus=None):
    """(q, ADD, MUL, NEG, modulus) for F_{p^n} with integer digit encoding."""
    q = p**n
    if n == 1:
        idx = np.arange(q, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
        negt = (-idx) % p
        return q, add.astype(np.int64), mul.astype(np.int64), negt.astype(np.int64), [0, 1]
    h = modulus if modulus is not None else _find_irreducible(p, n)
    if len(h) - 1 != n or h[-1] % p != 1 or not _is_irreducible(h, p):
        raise ValueError("modulus must be a monic irreducible of degree n")
    digits = [[(e // p**i) % p for i in range(n)] for e in range(q)]
    enc = lambda cs: sum(c * p**i for i, c in enumerate(cs))
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    negt = np.zeros(q, dtype=np.int64)
    for e1 in range(q):
        negt[e1] = enc([(-c) % p for c in digits[e1]])
        for e2 in range(q):
            add[e1, e2] = enc([(a + b) % p for a, b in zip(digits[e1], digits[e2])])
            mul[e1, e2] = enc(_pmul(digits[e1], digits[e2], p, h))
    return q, add, mul, negt, h


@dataclass
class FqField:
    """F_{p^{2n}} as F_q[s]/(s² - r) over the table-backed base field F_q."""

    p: int
    n: int
    q: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    base_modulus: list
    r: int  # quadratic non-residue of F_q

    @property
    def size(self) -> int:
        return self.q * self.q

    # -- base-field helpers --------------------------------------------------

    def base_pow(self, e: int, k: int) -> int:
        acc, b = 1 % self.q, e
        while k:
            if k & 1:
                acc = int(self.mul[acc, b])
            b = int(self.mul[b, b])
            k >>= 1
        return acc

    def base_inv(self, e: int) -> int:
        if e == 0:
            raise ZeroDivisionError
        return self.base_pow(e, self.q - 2)

    # -- extension-field index arithmetic ------------------------------------

    def pair(self, e: int):
        return e % self.q, e // self.q

    def index(self, x: int, y: int) -> int:
        return x + self.q * y

    def add2(self, e1: int, e2: int) -> int:
        x1, y1 = self.pair(e1)
        x2, y2 = self.pair(e2)
        return self.index(int(self.add[x1, x2]), int(self.add[y1, y2]))

    def mul2(self, e1: int, e2: int) -> int:
        x1, y1 = self.pair(e1)
        x2, y2 = self.pair(e2)
        xx = int(self.add[self.mul[x1, x2], self.mul[self.r, self.mul[y1, y2]]])
        yy = int(self.add[self.mul[x1, y2], self.mul[y1, x2]])
        return self.index(xx, yy)

    def neg2(self, e: int) -> int:
        x, y = self.pair(e)
        return self.index(int(self.neg[x]), int(self.neg[y]))

    def conj2(self, e: int) -> int:
        x, y = self.pair(e)
        return self.index(x, int(self.neg[y]))

    def pow2(self, e: int, k: int) -> int:
        acc, b = self.index(1 % self.q, 0), e
        while k:
            if k & 1:
                acc = self.mul2(acc, b)
            b = self.mul2(b, b)
            k >>= 1
        return acc

    def norm2(self, e: int) -> int:
        """e·conj(e), always in the base field; returned as a base index."""
        x, y = self.pair(e)
        return int(self.add[self.mul[x, x], self.neg[self.mul[self.r, self.mul[y, y]]]])

    def elem(self, x: int, y: int = 0) -> "FqElem":
        return FqElem(self, self.index(x % self.q, y % self.q))

    def elements(self):
        return (FqElem(self, e) for e in range(self.size))

    def __repr__(self):
        return f"FqField(p={self.p}, n={self.n}, r={self.r})"


class FqElem:
    """Element of F_{p^{2n}} with operator arithmetic (slow path, for tests)."""

    __slots__ = ("field", "idx")

    def __init__(self, field: FqField, idx: int):
        self.field = field
        self.idx = idx % field.size

    def _c(self, other):
        if isinstance(other, FqElem):
            return other
        if isinstance(other, int):
            return FqElem(self.field, other % self.field.q)
        return None

    def __add__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.add2(self.idx, o.idx))

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, self.field.neg2(self.idx))

    def __sub__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else self + (-o)

    def __mul__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else FqElem(self.field, self.field.mul2(self.idx, o.idx))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return FqElem(self.field, self.field.pow2(self.idx, k))

    def conj(self):
        return FqElem(self.field, self.field.conj2(self.idx))

    def norm(self) -> int:
        return self.field.norm2(self.idx)

    def in_base(self) -> bool:
        return self.idx < self.field.q

    def __eq__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else self.idx == o.idx

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __repr__(self):
        x, y = self.field.pair(self.idx)
        return f"FqElem({x} + {y}*s | q={self.field.q})"


def build_fq(p: int, n: int = 1, modulus=None, r: Optional[int] = None,
             cell_limit: int = DEFAULT_CELL_LIMIT, override: bool = False) -> FqField:
    """Construct F_{p^{2n}} with verified modulus and Frobenius conjugation.

    The guard refuses q^6 > cell_limit unless override is set, since the
    exhaustive verifiers loop over all q^6 coordinate triples.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p must be odd: the quadratic extension is built from a non-residue")
    if n < 1:
        raise ValueError("n must be >= 1")
    q = p**n
    if q**6 > cell_limit and not override:
        raise SizeLimitExceeded(
            f"q^6 = {q**6} exceeds the guard {cell_limit}; pass override=True to force"
        )
    q, add, mul, neg, h = _base_tables(p, n, modulus)
    if r is None:
        r = next(e for e in range(2, q) if _base_pow_static(mul, e, (q - 1) // 2, q) != 1)
    else:
        if r % q == 0 or _base_pow_static(mul, r % q, (q - 1) // 2, q) == 1:
            raise ValueError(f"{r} is not a quadratic non-residue of F_{q}")
        r = r % q
    fld = FqField(p, n, q, add, mul, neg, h, r)
    # conjugation must be the q-power Frobenius and an involution
    for e in (1 % q, q, q + 1, fld.size - 1):
        assert fld.conj2(e) == fld.pow2(e, q), "conjugation is not x -> x^q"
        assert fld.conj2(fld.conj2(e)) == e
    return fld


def _base_pow_static(mul, e, k, q):
    acc, b = 1 % q, e
    while k:
        if k & 1:
            acc = int(mul[acc, b])
        b = int(mul[b, b])
        k >>= 1
    return acc


# ---------------------------------------------------------------------------
# dual numbers


@dataclass
class DualRing:
    """F_q[pi]/(pi²) with conjugation pi -> -pi; x + y·pi encoded as x + q·y."""

    p: int
    n: int
    q: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    base_modulus: list

    @property
    def size(self) -> int:
        return self.q * self.q

    def pair(self, e: int):
        return e % self.q, e // self.q

    def index(self, x: int, y: int) -> int:
        return x + self.q * y

    def add2(self, e1, e2):
        x1, y1 = self.pair(e1)
        x2, y2 = self.pair(e2)
        return self.index(int(self.add[x1, x2]), int(self.add[y1, y2]))

    def mul2(self, e1, e2):
        x1, y1 = self.pair(e1)
        x2, y2 = self.pair(e2)
        return self.index(int(self.mul[x1, x2]),
                          int(self.add[self.mul[x1, y2], self.mul[y1, x2]]))

    def neg2(self, e):
        x, y = self.pair(e)
        return self.index(int(self.neg[x]), int(self.neg[y]))

    def conj2(self, e):
        x, y = self.pair(e)
        return self.index(x, int(self.neg[y]))

    def norm2(self, e) -> int:
        x, _ = self.pair(e)
        return int(self.mul[x, x])

    def is_unit(self, e) -> bool:
        return e % self.q != 0

    def elem(self, x: int, y: int = 0) -> "DualElem":
        return DualElem(self, self.index(x % self.q, y % self.q))

    def __repr__(self):
        return f"DualRing(p={self.p}, n={self.n})"


class DualElem:
    """Element of F_q[pi]/(pi²) with operator arithmetic (slow path)."""

    __slots__ = ("ring", "idx")

    def __init__(self, ring: DualRing, idx: int):
        self.ring = ring
        self.idx = idx % ring.size

    def _c(self, other):
        if isinstance(other, DualElem):
            return other
        if isinstance(other, int):
            return DualElem(self.ring, other % self.ring.q)
        return None

    def __add__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else DualElem(self.ring, self.ring.add2(self.idx, o.idx))

    __radd__ = __add__

    def __neg__(self):
        return DualElem(self.ring, self.ring.neg2(self.idx))

    def __sub__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else self + (-o)

    def __mul__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else DualElem(self.ring, self.ring.mul2(self.idx, o.idx))

    __rmul__ = __mul__

    def conj(self):
        return DualElem(self.ring, self.ring.conj2(self.idx))

    def __eq__(self, other):
        o = self._c(other)
        return NotImplemented if o is None else self.idx == o.idx

    def __hash__(self):
        return hash((id(self.ring), self.idx))

    def __repr__(self):
        x, y = self.ring.pair(self.idx)
        return f"DualElem({x} + {y}*pi | q={self.ring.q})"


def build_dual(p: int, n: int = 1, modulus=None,
               cell_limit: int = DEFAULT_CELL_LIMIT, override: bool = False) -> DualRing:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p must be odd")
    q = p**n
    if q**6 > cell_limit and not override:
        raise SizeLimitExceeded(
            f"q^6 = {q**6} exceeds the guard {cell_limit}; pass override=True to force"
        )
    q, add, mul, neg, h = _base_tables(p, n, modulus)
    return DualRing(p, n, q, add, mul, neg, h)
