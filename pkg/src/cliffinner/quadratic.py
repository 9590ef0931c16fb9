"""Diagonal quadratic forms on coordinate spaces and their subspaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, NonSquareForm
from .scalars import ONE, ZERO, Scalar, as_scalar, render_scalar


@dataclass(frozen=True)
class QuadraticSpace:
    """F^n with f(x) = sum(diag[i] * x_i**2)."""

    diag: tuple

    def __post_init__(self):
        d = tuple(as_scalar(x) for x in self.diag)
        if any(not x for x in d):
            raise ValueError("diagonal form values must be nonzero")
        object.__setattr__(self, "diag", d)

    @classmethod
    def orthonormal(cls, n: int) -> "QuadraticSpace":
        return cls((ONE,) * n)

    @property
    def n(self) -> int:
        return len(self.diag)

    @property
    def is_orthonormal(self) -> bool:
        return all(x == ONE for x in self.diag)

    def require_square_diagonal(self) -> None:
        bad = [i for i, x in enumerate(self.diag) if x.sqrt() is None]
        if bad:
            raise NonSquareForm(
                f"f(v_i) is not a square in Q(i) for i in {bad}; "
                "no orthonormal basis exists over this field"
            )

    def _check(self, v):
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} in a {self.n}-dimensional space")

    def quad(self, v: Sequence) -> Scalar:
        self._check(v)
        acc = ZERO
        for d, x in zip(self.diag, v):
            x = as_scalar(x)
            if x:
                acc = acc + d * x * x
        return acc

    def bilinear(self, v: Sequence, w: Sequence) -> Scalar:
        """(v|w) = f(v+w) - f(v) - f(w) = sum(2 * diag[i] * v_i * w_i)."""
        self._check(v)
        self._check(w)
        acc = ZERO
        for d, x, y in zip(self.diag, v, w):
            x, y = as_scalar(x), as_scalar(y)
            if x and y:
                acc = acc + 2 * d * x * y
        return acc

    def gram(self, vectors: Sequence[Sequence]) -> list[list[Scalar]]:
        return [[self.bilinear(u, v) for v in vectors] for u in vectors]

    def ortho_complement(self, U: "Subspace") -> "Subspace":
        if U.n != self.n:
            raise DimensionMismatch("subspace lives in a different ambient space")
        rows = [[2 * d * x for d, x in zip(self.diag, u)] for u in U.basis]
        if not rows:
            return Subspace.full(self.n)
        return Subspace(self.n, linalg.nullspace(rows, self.n))

    def is_nondegenerate_on(self, U: "Subspace") -> bool:
        if not U.basis:
            return True
        return bool(linalg.det(self.gram(U.basis)))

    def radical(self, U: "Subspace") -> "Subspace":
        return U.intersect(self.ortho_complement(U))


def bilinear(space: QuadraticSpace, v, w) -> Scalar:
    return space.bilinear(v, w)


def ortho_complement(space: QuadraticSpace, U: "Subspace") -> "Subspace":
    return space.ortho_complement(U)


def is_nondegenerate_on(space: QuadraticSpace, U: "Subspace") -> bool:
    return space.is_nondegenerate_on(U)


class Subspace:
    """A subspace of F^n stored by its reduced row-echelon basis.

    The echelon form is canonical, so ``==`` is equality of subspaces.
    """

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        rows = [[as_scalar(x) for x in v] for v in vectors]
        if any(len(r) != n for r in rows):
            raise DimensionMismatch(f"vectors must have length {n}")
        red, piv = linalg.rref(rows, n) if rows else ([], [])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))
        object.__setattr__(self, "pivots", tuple(piv))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, linalg.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        rows = []
        for i in indices:
            v = [ZERO] * n
            v[i] = ONE
            rows.append(v)
        return cls(n, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def contains(self, v: Sequence) -> bool:
        v = [as_scalar(x) for x in v]
        if len(v) != self.n:
            raise DimensionMismatch("vector length does not match ambient dimension")
        # reduce by the echelon basis
        r = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = r[p]
            if c:
                r = [x - c * y for x, y in zip(r, row)]
        return not any(r)

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace(self.n, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise DimensionMismatch("ambient dimensions differ")
        if not self.basis or not other.basis:
            return Subspace.zero(self.n)
        a, b = list(self.basis), list(other.basis)
        # columns: a_1..a_p, -b_1..-b_q ; kernel gives sum x_i a_i = sum y_j b_j
        cols = a + [[-x for x in v] for v in b]
        mat = linalg.transpose(cols)
        kern = linalg.nullspace(mat, len(cols))
        out = []
        for k in kern:
            v = [ZERO] * self.n
            for coef, vec in zip(k[: len(a)], a):
                if coef:
                    v = [x + coef * y for x, y in zip(v, vec)]
            out.append(v)
        return Subspace(self.n, out)

    def pivot_complement(self) -> "Subspace":
        """Span of the standard basis vectors at non-pivot columns."""
        piv = set(self.pivots)
        return Subspace.coordinate(self.n, [c for c in range(self.n) if c not in piv])

    def image(self, matrix: Sequence[Sequence[Scalar]]) -> "Subspace":
        return Subspace(self.n, [linalg.matvec(matrix, v) for v in self.basis])

    def embed(self, n: int) -> "Subspace":
        """Pad coordinates with zeros up to ambient dimension n."""
        if n < self.n:
            raise DimensionMismatch("cannot embed into a smaller space")
        return Subspace(n, [list(v) + [ZERO] * (n - self.n) for v in self.basis])

    def to_json(self) -> list[list[str]]:
        return [[render_scalar(x) for x in row] for row in self.basis]

    def __repr__(self):
        return f"Subspace(n={self.n}, basis={self.to_json()})"
