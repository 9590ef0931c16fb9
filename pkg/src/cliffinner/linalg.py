"""Dense exact linear algebra over Q(i).

Matrices are lists of rows of :class:`Scalar`. Every routine copies its
input; nothing is mutated in place from the caller's point of view.
Elimination skips zero entries, which matters because most systems built
from Clifford products are very sparse.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, Scalar, as_scalar

Vector = list  # list[Scalar]
Matrix = list  # list[list[Scalar]]


def to_matrix(rows) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("matrix shapes do not align")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def dot(v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for x, y in zip(v, w):
        if x and y:
            acc = acc + x * y
    return acc


def rref(rows: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns).

    Pivot rows are scaled to a leading 1 and all other entries in a pivot
    column are cleared, so the result is canonical for the row space.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != ONE:
            inv = piv.inverse()
            m[r] = [x * inv if x else ZERO for x in m[r]]
        prow = m[r]
        nz = [(j, x) for j, x in enumerate(prow) if x and j >= c]
        for i in range(len(m)):
            if i == r:
                continue
            f = m[i][c]
            if not f:
                continue
            row = m[i]
            for j, x in nz:
                row[j] = row[j] - f * x
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix, ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> Matrix:
    """Basis of {x : a x = 0}, one vector per free column, in RREF-derived order."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def det(a: Matrix) -> Scalar:
    n = len(a)
    if n == 0:
        return ONE
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in a]
    d = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        piv = m[c][c]
        d = d * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = m[i][c]
            if not f:
                continue
            f = f * inv
            for j in range(c, n):
                if m[c][j]:
                    m[i][j] = m[i][j] - f * m[c][j]
    return d


def solve(a: Matrix, b: Sequence[Scalar]) -> Vector | None:
    """One solution of a x = b, or None if the system is inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [as_scalar(y)] for row, y in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return not any(v)
