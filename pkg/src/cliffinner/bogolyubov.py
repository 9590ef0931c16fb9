"""Bogolyubov automorphisms [phi] of a finite truncation Cl(V_n)."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .clifford import Multivector, blade_indices, mv_mul
from .errors import DependentVectors, DimensionMismatch
from .finitary import FinitaryOrthogonal, require_orthogonal
from .quadratic import Subspace
from .scalars import as_scalar


class BogolyubovAction:
    """[phi] on Cl(V_n): block on v_0..v_{m-1}, tail sign on v_m..v_{n-1}.

    ``check=False`` skips the orthogonality check so that corrupted maps can
    be fed to :func:`check_automorphism`.
    """

    def __init__(self, phi: FinitaryOrthogonal, n: int | None = None, check: bool = True):
        if n is None:
            n = phi.m
        if n < phi.m:
            raise DimensionMismatch(f"truncation n = {n} is smaller than the block ({phi.m})")
        if check:
            require_orthogonal(phi)
        self.phi = phi
        self.n = n

    @cached_property
    def matrix(self):
        return self.phi.matrix(self.n)

    @cached_property
    def generator_images(self) -> tuple[Multivector, ...]:
        n = self.n
        mat = self.matrix
        return tuple(Multivector(n, {1 << j: mat[j][i] for j in range(n) if mat[j][i]}) for i in range(n))

    def image_of_vector(self, v: Sequence) -> list:
        return linalg.matvec(self.matrix, [as_scalar(x) for x in v])

    def apply_blade(self, blade: int) -> Multivector:
        out = Multivector.scalar(self.n)
        imgs = self.generator_images
        for i in blade_indices(blade):
            out = mv_mul(out, imgs[i])
        return out

    def apply(self, a: Multivector) -> Multivector:
        if a.n != self.n:
            raise DimensionMismatch(f"element of Cl(V_{a.n}) given to an action on Cl(V_{self.n})")
        out = Multivector.zero(self.n)
        for blade, c in a.items():
            out = out + self.apply_blade(blade).scale(c)
        return out

    __call__ = apply


def apply(action: BogolyubovAction, a: Multivector) -> Multivector:
    return action.apply(a)


def check_automorphism(action: BogolyubovAction, samples: Iterable[tuple[Multivector, Multivector]]) -> bool:
    """apply(1) == 1 and apply(a*b) == apply(a)*apply(b) on every sampled pair."""
    one = Multivector.scalar(action.n)
    if action.apply(one) != one:
        return False
    for a, b in samples:
        if action.apply(a * b) != action.apply(a) * action.apply(b):
            return False
    return True


def fixes_bivector(action: BogolyubovAction, v1: Sequence, v2: Sequence) -> bool:
    """[phi](v1 v2) == v1 v2, evaluated as phi(v1) phi(v2) == v1 v2."""
    return _bivector_fixed(Multivector.vector(v1) * Multivector.vector(v2),
                           action.image_of_vector(v1), action.image_of_vector(v2))


def _bivector_fixed(x: Multivector, w1, w2) -> bool:
    return Multivector.vector(w1) * Multivector.vector(w2) == x


def lemma3_witness_check(action: BogolyubovAction, v1: Sequence, v2: Sequence) -> bool:
    """If [phi](v1 v2) == v1 v2 then span(v1, v2) is phi-invariant.

    Returns the truth value of the implication; vacuously True when the
    bivector is not fixed.
    """
    v1 = [as_scalar(x) for x in v1]
    v2 = [as_scalar(x) for x in v2]
    if len(v1) != action.n or len(v2) != action.n:
        raise DimensionMismatch("vectors must have the truncation length")
    span = Subspace(action.n, [v1, v2])
    if span.dim != 2:
        raise DependentVectors("v1 and v2 must be linearly independent")
    w1, w2 = action.image_of_vector(v1), action.image_of_vector(v2)
    if not _bivector_fixed(Multivector.vector(v1) * Multivector.vector(v2), w1, w2):
        return True
    return span.contains(w1) and span.contains(w2)


def conjugate(x: Multivector, a: Multivector, x_inv: Multivector | None = None) -> Multivector:
    """x a x^-1."""
    if x_inv is None:
        x_inv = x.inverse()
    return x * a * x_inv
