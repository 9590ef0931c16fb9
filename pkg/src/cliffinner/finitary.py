"""Orthogonal maps of an infinite orthonormal space in block + tail form.

A :class:`FinitaryOrthogonal` acts by an m x m matrix on the first m basis
vectors and by the scalar ``tail`` (+1 or -1) on every later basis vector.
Any finite piece of the infinite space is handled through a *window*: the
first N >= m coordinates, on which the map is ``block (+) tail * I``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import InfiniteCodimension, InvalidArgument, InvalidComplement, NotOrthogonal
from .quadratic import QuadraticSpace, Subspace
from .scalars import ONE, ZERO, Scalar, as_scalar, parse_scalar, render_scalar

INFINITE = float("inf")


class FinitaryOrthogonal:
    __slots__ = ("block", "tail")

    def __init__(self, block: Sequence[Sequence] = (), tail: int = 1):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in block)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise InvalidArgument("block must be square")
        if tail not in (1, -1):
            raise InvalidArgument(f"tail must be +1 or -1, got {tail!r}")
        object.__setattr__(self, "block", rows)
        object.__setattr__(self, "tail", int(tail))

    def __setattr__(self, name, value):
        raise AttributeError("FinitaryOrthogonal is immutable")

    @property
    def m(self) -> int:
        return len(self.block)

    def __eq__(self, other):
        if not isinstance(other, FinitaryOrthogonal):
            return NotImplemented
        return self.block == other.block and self.tail == other.tail

    def __hash__(self):
        return hash((self.block, self.tail))

    def __repr__(self):
        return f"FinitaryOrthogonal({self.to_json()})"

    def matrix(self, n: int | None = None) -> list[list[Scalar]]:
        """The action on the first n coordinates (n >= m)."""
        m = self.m
        n = m if n is None else n
        if n < m:
            raise InvalidArgument(f"window of size {n} is smaller than the block ({m})")
        t = ONE if self.tail == 1 else -ONE
        out = []
        for i in range(n):
            if i < m:
                out.append(list(self.block[i]) + [ZERO] * (n - m))
            else:
                row = [ZERO] * n
                row[i] = t
                out.append(row)
        return out

    def widen(self, n: int) -> "FinitaryOrthogonal":
        """Same map with a block of size n."""
        return FinitaryOrthogonal(self.matrix(n), self.tail)

    def compose(self, other: "FinitaryOrthogonal") -> "FinitaryOrthogonal":
        """self after other; tails multiply."""
        n = max(self.m, other.m)
        prod = linalg.matmul(self.matrix(n), other.matrix(n))
        return FinitaryOrthogonal(prod, self.tail * other.tail)

    def inverse(self) -> "FinitaryOrthogonal":
        """Transpose; only meaningful for orthogonal maps."""
        return FinitaryOrthogonal(linalg.transpose(list(map(list, self.block))), self.tail)

    def apply_vector(self, v: Sequence) -> list[Scalar]:
        v = [as_scalar(x) for x in v]
        return linalg.matvec(self.matrix(max(len(v), self.m)), v + [ZERO] * max(0, self.m - len(v)))

    def is_identity(self) -> bool:
        return self.tail == 1 and self.block_is_scalar(ONE)

    def is_minus_identity(self) -> bool:
        return self.tail == -1 and self.block_is_scalar(-ONE)

    def block_is_scalar(self, c: Scalar) -> bool:
        return all(x == (c if i == j else ZERO) for i, row in enumerate(self.block) for j, x in enumerate(row))

    # JSON

    def to_json(self) -> dict:
        return {
            "block": [[render_scalar(x) for x in row] for row in self.block],
            "tail": "+1" if self.tail == 1 else "-1",
        }

    @classmethod
    def from_json(cls, data) -> "FinitaryOrthogonal":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "block" not in data or "tail" not in data:
            raise InvalidArgument('expected an object with "block" and "tail"')
        tail = data["tail"]
        if isinstance(tail, str):
            tail = tail.strip()
            if tail not in ("+1", "-1", "1"):
                raise InvalidArgument(f"tail must be \"+1\" or \"-1\", got {tail!r}")
            tail = -1 if tail == "-1" else 1
        elif isinstance(tail, bool) or tail not in (1, -1):
            raise InvalidArgument(f"tail must be +1 or -1, got {tail!r}")
        block = data["block"]
        if not isinstance(block, list) or any(not isinstance(r, list) for r in block):
            raise InvalidArgument("block must be a list of rows")
        rows = [[parse_scalar(x) if isinstance(x, str) else as_scalar(x) for x in r] for r in block]
        return cls(rows, tail)


def check_orthogonal(phi: FinitaryOrthogonal) -> bool:
    """B^T B == I exactly (orthogonality for the orthonormal form)."""
    b = [list(r) for r in phi.block]
    return linalg.matmul(linalg.transpose(b, phi.m), b) == linalg.identity(phi.m)


def require_orthogonal(phi: FinitaryOrthogonal) -> None:
    if not check_orthogonal(phi):
        raise NotOrthogonal("block is not orthogonal: B^T B != I")


@dataclass(frozen=True)
class EigenData:
    alpha: int
    eigenspace: Subspace  # V(alpha) inside the block coordinates
    codim: int
    quotient_det: Scalar


def _shifted(phi: FinitaryOrthogonal, alpha: int, n: int | None = None):
    a = phi.matrix(n)
    s = ONE if alpha == 1 else -ONE
    return [[x - s if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def eigenspace(phi: FinitaryOrthogonal, alpha: int, n: int | None = None) -> Subspace:
    """ker(phi - alpha) restricted to the first n coordinates (default: the block)."""
    n = phi.m if n is None else n
    if n == 0:
        return Subspace.zero(0)
    return Subspace(n, linalg.nullspace(_shifted(phi, alpha, n), n))


def image_of_shift(phi: FinitaryOrthogonal, alpha: int, n: int | None = None) -> Subspace:
    """(phi - alpha)(F^n)."""
    n = phi.m if n is None else n
    a = _shifted(phi, alpha, n)
    return Subspace(n, linalg.transpose(a, n))


def induced_det(matrix, fixed: Subspace, complement: Subspace) -> Scalar:
    """Determinant of the map induced on F^n / fixed, read through ``complement``."""
    n = fixed.n
    cs = [list(v) for v in complement.basis]
    es = [list(v) for v in fixed.basis]
    r = len(cs)
    if r == 0:
        return ONE
    cols = cs + es
    basis_mat = linalg.transpose(cols, n)
    m = []
    for c in cs:
        coords = linalg.solve(basis_mat, linalg.matvec(matrix, c))
        if coords is None:
            raise InvalidComplement("complement and subspace do not span the space")
        m.append(coords[:r])
    return linalg.det(linalg.transpose(m, r))


def _check_alpha(alpha):
    if alpha not in (1, -1):
        raise InvalidArgument(f"alpha must be +1 or -1, got {alpha!r}")


def eigen_data(phi: FinitaryOrthogonal, alpha: int) -> EigenData:
    """V(alpha) in the block, dim V/V(alpha), and det of phi on V/V(alpha).

    The tail lies inside V(tail); for alpha != tail the quotient is infinite
    dimensional and :class:`InfiniteCodimension` is raised.
    """
    _check_alpha(alpha)
    if phi.tail != alpha:
        exc = InfiniteCodimension(
            f"V({alpha:+d}) has infinite codimension when the tail acts by {phi.tail:+d}"
        )
        exc.codim = INFINITE
        raise exc
    e = eigenspace(phi, alpha)
    qd = induced_det(phi.matrix(), e, e.pivot_complement())
    return EigenData(alpha, e, phi.m - e.dim, qd)


def is_complement(fixed: Subspace, c: Subspace) -> bool:
    return c.n == fixed.n and c.dim + fixed.dim == fixed.n and (c + fixed).dim == fixed.n


def quotient_det_independence_check(phi, alpha, complement_a: Subspace, complement_b: Subspace) -> bool:
    """Induced determinants through two complements of V(alpha) agree."""
    _check_alpha(alpha)
    if phi.tail != alpha:
        raise InfiniteCodimension("quotient is infinite dimensional")
    e = eigenspace(phi, alpha)
    for c in (complement_a, complement_b):
        if not is_complement(e, c):
            raise InvalidComplement(f"{c!r} is not a complement of V({alpha:+d})")
    a = phi.matrix()
    return induced_det(a, e, complement_a) == induced_det(a, e, complement_b)


# invariant core


def _project_off(space: QuadraticSpace, plane: Sequence[Sequence[Scalar]], vectors):
    """Orthogonal projection onto plane^perp of each vector (plane nondegenerate)."""
    g = space.gram(plane)
    ginv = _inverse(g)
    out = []
    for x in vectors:
        b = [space.bilinear(x, p) for p in plane]
        c = linalg.matvec(ginv, b)
        y = list(x)
        for coef, p in zip(c, plane):
            if coef:
                y = [yy - coef * pp for yy, pp in zip(y, p)]
        out.append(y)
    return out


def _inverse(g):
    n = len(g)
    cols = [linalg.solve(g, e) for e in linalg.identity(n)]
    return linalg.transpose(cols, n)


def _anisotropic(space: QuadraticSpace, sub: Subspace):
    vs = [list(v) for v in sub.basis]
    for v in vs:
        if space.quad(v):
            return v
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            w = [x + y for x, y in zip(vs[i], vs[j])]
            if space.quad(w):
                return w
    return None


def _starting_subspace(phi: FinitaryOrthogonal, alpha: int) -> Subspace:
    # smallest convenient invariant U with F^m = U + V(alpha)
    m = phi.m
    img = image_of_shift(phi, alpha)
    ker = eigenspace(phi, alpha)
    if (img + ker).dim == m:
        return img
    return Subspace.full(m)


def invariant_core(phi: FinitaryOrthogonal) -> Subspace:
    """Even-dimensional, nondegenerate, phi-invariant W with W^perp inside V(tail).

    The result lives in a window of N >= m coordinates (``W.n == N``); N
    exceeds m by one only when an odd-dimensional nondegenerate core needs
    an extra anisotropic vector and none is left in the block.
    """
    require_orthogonal(phi)
    alpha = phi.tail
    n = phi.m
    space = QuadraticSpace.orthonormal(n)
    u_sub = _starting_subspace(phi, alpha)
    ambient = Subspace.full(n)
    planes: list[list[Scalar]] = []
    while True:
        perp = space.ortho_complement(u_sub) if n else Subspace.zero(0)
        rad = u_sub.intersect(perp)
        if rad.dim:
            u = list(rad.basis[0])
            fixed = eigenspace(phi, alpha, n).intersect(ambient)
            v = next((list(w) for w in fixed.basis if space.bilinear(u, w)), None)
            if v is None:
                raise ArithmeticError("no pairing vector in V(alpha); input is not orthogonal")
            plane = [u, v]
            planes.extend(plane)
            ambient = ambient.intersect(space.ortho_complement(Subspace(n, plane)))
            u_sub = Subspace(n, _project_off(space, plane, [list(x) for x in u_sub.basis]))
            continue
        if u_sub.dim % 2:
            spare = ambient.intersect(perp)
            w = _anisotropic(space, spare)
            if w is None:
                # fresh tail coordinate: orthogonal to the window and in V(tail)
                n += 1
                space = QuadraticSpace.orthonormal(n)
                u_sub = u_sub.embed(n)
                ambient = ambient.embed(n) + Subspace.coordinate(n, [n - 1])
                planes = [list(p) + [ZERO] for p in planes]
                w = [ZERO] * (n - 1) + [ONE]
            u_sub = u_sub + Subspace(n, [w])
        return Subspace(n, planes + [list(x) for x in u_sub.basis])


def core_properties(phi: FinitaryOrthogonal, w: Subspace) -> dict[str, bool]:
    """The four defining properties of an invariant core, checked exactly."""
    n = w.n
    space = QuadraticSpace.orthonormal(n)
    a = phi.matrix(n)
    perp = space.ortho_complement(w) if n else Subspace.zero(0)
    fixed = eigenspace(phi, phi.tail, n) if n else Subspace.zero(0)
    return {
        "even": w.dim % 2 == 0,
        "nondegenerate": space.is_nondegenerate_on(w),
        "invariant": w.contains_subspace(w.image(a)) if n else True,
        "complement_fixed": fixed.contains_subspace(perp),
    }
