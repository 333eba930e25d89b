"""Gaussian elimination over an arbitrary exact field.

Works on lists of lists whose entries support +, -, *, / and == against the
supplied zero/one elements (Fraction, QuadElem, TowerElem, ...).
"""

from __future__ import annotations


class SingularMatrixError(ZeroDivisionError):
    pass


def mat_inverse(rows, zero, one):
    """Inverse of a square matrix by row reduction; raises if singular."""
    n = len(rows)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != zero), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = one / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != zero:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_det(rows, zero, one):
    """Determinant by fraction-full elimination (entries form a field)."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != zero), None)
        if piv is None:
            return zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = zero - det
        det = det * m[col][col]
        inv_p = one / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != zero:
                factor = m[r][col] * inv_p
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def mat_mul(a, b, zero):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out
