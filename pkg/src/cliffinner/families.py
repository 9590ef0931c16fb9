"""Families of orthogonal blocks over Q(i) used by the sweeps and self-tests."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from . import linalg
from .finitary import FinitaryOrthogonal
from .scalars import ONE, ZERO, Scalar

_SMALL_COMPLEX = (0, 1, -1, 1j, -1j)


@lru_cache(maxsize=None)
def small_orthogonal_blocks(m: int) -> tuple[tuple[tuple[Scalar, ...], ...], ...]:
    """Every m x m orthogonal matrix (B^T B = I) with entries in {0, +-1, +-i}.

    Built column by column; each new column must have unit square norm and
    be orthogonal to the earlier ones. The search runs on Python complex
    numbers, which are exact for these tiny Gaussian integers.
    """
    if m == 0:
        return ((),)

    def dot(v, w):
        return sum(x * y for x, y in zip(v, w))

    unit = [v for v in itertools.product(_SMALL_COMPLEX, repeat=m) if dot(v, v) == 1]
    found = []

    def extend(cols):
        if len(cols) == m:
            found.append(cols)
            return
        for v in unit:
            if all(dot(v, c) == 0 for c in cols):
                extend(cols + [v])

    extend([])
    conv = {z: Scalar(int(complex(z).real), int(complex(z).imag)) for z in _SMALL_COMPLEX}
    return tuple(tuple(tuple(conv[c[i]] for c in cols) for i in range(m)) for cols in found)


def small_maps(max_m: int = 3):
    for m in range(max_m + 1):
        for block in small_orthogonal_blocks(m):
            for tail in (1, -1):
                yield FinitaryOrthogonal(block, tail)


def rotation(m: int, p: int, q: int, t: Scalar) -> list[list[Scalar]]:
    """Rotation by (a, b) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) in the (p, q) plane."""
    d = ONE + t * t
    if not d:
        raise ValueError("1 + t^2 must be nonzero")
    a = (ONE - t * t) / d
    b = 2 * t / d
    r = linalg.identity(m)
    r[p][p], r[p][q] = a, -b
    r[q][p], r[q][q] = b, a
    return r


def reflection(u) -> list[list[Scalar]]:
    """v -> v - 2 (u.v)/(u.u) u for an anisotropic u."""
    uu = linalg.dot(u, u)
    if not uu:
        raise ValueError("reflection vector must be anisotropic")
    m = len(u)
    c = Scalar(2) / uu
    return [[(ONE if i == j else ZERO) - c * u[i] * u[j] for j in range(m)] for i in range(m)]


def _random_gaussian(rng: random.Random, span: int = 3) -> Scalar:
    return Scalar(rng.randint(-span, span), rng.randint(-span, span)) / rng.randint(1, span)


def random_orthogonal_block(rng: random.Random, m: int, factors: int = 3) -> list[list[Scalar]]:
    """Product of random plane rotations and reflections over Q(i)."""
    mat = linalg.identity(m)
    if m == 0:
        return mat
    for _ in range(factors):
        if m >= 2 and rng.random() < 0.5:
            p, q = rng.sample(range(m), 2)
            while True:
                t = _random_gaussian(rng)
                if ONE + t * t:
                    break
            f = rotation(m, p, q, t)
        else:
            while True:
                u = [_random_gaussian(rng) for _ in range(m)]
                if linalg.dot(u, u):
                    break
            f = reflection(u)
        mat = linalg.matmul(f, mat)
    return mat


def random_map(rng: random.Random, max_m: int = 4, min_m: int = 1) -> FinitaryOrthogonal:
    m = rng.randint(min_m, max_m)
    return FinitaryOrthogonal(random_orthogonal_block(rng, m, rng.randint(1, 4)), rng.choice((1, -1)))
