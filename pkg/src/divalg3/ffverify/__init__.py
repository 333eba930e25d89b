"""Exhaustive verification of the two local anisotropy statements.

Over F_{p^{2n}} with q = p^n ≡ 5 mod 6, the homogeneous membership system

    l0·T(l0) + b·l1·T(l1) + b²·l2·T(l2) = 0
    a·T(l0)·l2 + b·T(l1)·l0 + b²·T(l2)·l1 = 0

(a not in F_q, a·T(a) = b³, b in F_q^×) has only the trivial solution; over
the dual numbers F_q[pi]/(pi²) with F_q free of third roots of unity every
solution vanishes mod pi.  Both statements are checked here by brute force
over all q^6 coordinate triples — no shortcuts from any proof are used,
which is the point: the loops are an independent oracle.

Runs with violated hypotheses are allowed and flagged informational; they
double as negative controls showing the hypotheses are sharp.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._fields import (
    DEFAULT_CELL_LIMIT,
    DualElem,
    DualRing,
    FqElem,
    FqField,
    SizeLimitExceeded,
    build_dual,
    build_fq,
)
from ._kernels import BACKEND, ENV_FLAG, HAVE_NUMBA, count_solutions

__all__ = [
    "DEFAULT_CELL_LIMIT",
    "BACKEND",
    "ENV_FLAG",
    "HAVE_NUMBA",
    "DualElem",
    "DualRing",
    "FqElem",
    "FqField",
    "LemmaReport",
    "SizeLimitExceeded",
    "admissible_pairs",
    "admissible_pairs_dual",
    "build_dual",
    "build_fq",
    "count_solutions",
    "residuals",
    "verify_all_dual",
    "verify_all_modp",
    "verify_lemma_dual",
    "verify_lemma_modp",
]


@dataclass
class LemmaReport:
    p: int
    n: int
    ring: str  # "quadratic_ext" | "dual"
    a: tuple  # (x, y) components over F_q
    b: int
    hypothesis_ok: bool
    mode: str  # "verified" | "informational"
    enumerated: int
    solution_count: int
    nontrivial_count: int
    nontrivial_solutions: list = field(default_factory=list)
    backend: str = BACKEND

    @property
    def verdict(self) -> bool:
        return self.nontrivial_count == 0

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "ring": self.ring,
            "a": list(self.a),
            "b": self.b,
            "hypothesis_ok": self.hypothesis_ok,
            "mode": self.mode,
            "enumerated": self.enumerated,
            "solution_count": self.solution_count,
            "nontrivial_count": self.nontrivial_count,
            "nontrivial_solutions": [
                [list(t) for t in sol] for sol in self.nontrivial_solutions
            ],
            "verdict": self.verdict,
            "backend": self.backend,
        }


def admissible_pairs(fld: FqField):
    """All (a, b): a in F_{q²} \\ F_q, b in F_q^×, a·conj(a) = b³.

    Returned sorted by (b, a-index) for reproducible reports.
    """
    q = fld.q
    cubes = {}
    for b in range(1, q):
        cubes.setdefault(fld.base_pow(b, 3), []).append(b)
    pairs = []
    for e in range(fld.size):
        if e < q:  # a must be outside the base field
            continue
        for b in cubes.get(fld.norm2(e), ()):
            pairs.append((e, b))
    pairs.sort(key=lambda ab: (ab[1], ab[0]))
    return pairs


def admissible_pairs_dual(ring: DualRing):
    """All (a, b): a a unit of R outside F_q, b in F_q^×, a·conj(a) = b³."""
    q = ring.q
    cubes = {}
    for b in range(1, q):
        acc = int(ring.mul[b, b])
        cubes.setdefault(int(ring.mul[acc, b]), []).append(b)
    pairs = []
    for y in range(1, q):
        for x in range(1, q):
            e = ring.index(x, y)
            for b in cubes.get(ring.norm2(e), ()):
                pairs.append((e, b))
    pairs.sort(key=lambda ab: (ab[1], ab[0]))
    return pairs


def _check_admissible(ring, a: int, b: int, dual: bool):
    q = ring.q
    if not (0 < b < q):
        raise ValueError("b must be a nonzero base-field element")
    bcube = int(ring.mul[ring.mul[b, b], b])
    if dual:
        if not ring.is_unit(a) or a < q:
            raise ValueError("a must be a unit of the dual ring outside the base field")
    else:
        if a < q:
            raise ValueError("a must lie outside the base field")
    if ring.norm2(a) != bcube:
        raise ValueError("pair is not admissible: a·conj(a) != b³")


def hypothesis_modp(fld: FqField) -> bool:
    """q ≡ 5 mod 6 — no primitive sixth root of unity in F_q."""
    return fld.q % 6 == 5


def hypothesis_dual(ring: DualRing) -> bool:
    """F_q contains no primitive third root of unity."""
    return ring.q % 3 != 1


def verify_lemma_modp(fld: FqField, a: int, b: int, cap: int = 32,
                      backend: str = None) -> LemmaReport:
    """Exhaustive solution count over F_{q²}³; verdict true iff only (0,0,0).

    A violated congruence hypothesis downgrades the run to informational
    (negative-control) mode but still enumerates everything.
    """
    _check_admissible(fld, a, b, dual=False)
    hyp = hypothesis_modp(fld)
    total, ntr, rec = count_solutions(fld, a, b, dual=False, cap=cap, backend=backend)
    sols = [[fld.pair(int(v)) for v in row] for row in rec]
    return LemmaReport(
        p=fld.p, n=fld.n, ring="quadratic_ext", a=fld.pair(a), b=b,
        hypothesis_ok=hyp, mode="verified" if hyp else "informational",
        enumerated=fld.size**3, solution_count=total,
        nontrivial_count=ntr, nontrivial_solutions=sols,
        backend=backend or BACKEND,
    )


def verify_lemma_dual(ring: DualRing, a: int, b: int, cap: int = 32,
                      backend: str = None) -> LemmaReport:
    """Exhaustive count over R³; verdict true iff every solution is 0 mod pi."""
    _check_admissible(ring, a, b, dual=True)
    hyp = hypothesis_dual(ring)
    total, ntr, rec = count_solutions(ring, a, b, dual=True, cap=cap, backend=backend)
    sols = [[ring.pair(int(v)) for v in row] for row in rec]
    return LemmaReport(
        p=ring.p, n=ring.n, ring="dual", a=ring.pair(a), b=b,
        hypothesis_ok=hyp, mode="verified" if hyp else "informational",
        enumerated=ring.size**3, solution_count=total,
        nontrivial_count=ntr, nontrivial_solutions=sols,
        backend=backend or BACKEND,
    )


def verify_all_modp(fld: FqField, cap: int = 32, backend: str = None):
    return [verify_lemma_modp(fld, a, b, cap, backend) for a, b in admissible_pairs(fld)]


def verify_all_dual(ring: DualRing, cap: int = 32, backend: str = None):
    return [verify_lemma_dual(ring, a, b, cap, backend) for a, b in admissible_pairs_dual(ring)]


def residuals(ring, a: int, b: int, l0: int, l1: int, l2: int, dual: bool = False):
    """Both membership residuals for one triple, via the slow wrapper arithmetic.

    Independent of the array kernels; used to cross-check them.
    """
    E = (lambda i: DualElem(ring, i)) if dual else (lambda i: FqElem(ring, i))
    av, l0v, l1v, l2v = E(a), E(l0), E(l1), E(l2)
    bv = E(b)
    b2 = bv * bv
    e1 = l0v * l0v.conj() + bv * (l1v * l1v.conj()) + b2 * (l2v * l2v.conj())
    e2 = av * l0v.conj() * l2v + bv * l1v.conj() * l0v + b2 * l2v.conj() * l1v
    return e1.idx, e2.idx
