import random

import pytest

from cliffinner.errors import DimensionMismatch, NonSquareForm
from cliffinner.quadratic import QuadraticSpace, Subspace, bilinear, is_nondegenerate_on, ortho_complement
from cliffinner.scalars import ONE, ZERO, Scalar

from conftest import random_scalar


def e(n, i):
    return [ONE if j == i else ZERO for j in range(n)]


def test_bilinear_examples():
    q2 = QuadraticSpace.orthonormal(2)
    assert bilinear(q2, e(2, 0), e(2, 0)) == Scalar(2)
    assert bilinear(q2, e(2, 0), e(2, 1)) == ZERO
    v, w = [1, 1], [1, -1]
    vw = [a + b for a, b in zip(v, w)]
    assert bilinear(q2, v, w) == q2.quad(vw) - q2.quad(v) - q2.quad(w) == ZERO


def test_bilinear_is_polarisation_random(rng):
    for _ in range(200):
        n = rng.randint(1, 6)
        q = QuadraticSpace(tuple(random_scalar(rng) or ONE for _ in range(n)))
        v = [random_scalar(rng) for _ in range(n)]
        w = [random_scalar(rng) for _ in range(n)]
        s = [a + b for a, b in zip(v, w)]
        assert q.bilinear(v, w) == q.quad(s) - q.quad(v) - q.quad(w)
        assert q.bilinear(v, w) == q.bilinear(w, v)
        assert q.bilinear(v, v) == 2 * q.quad(v)


def test_bilinear_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        QuadraticSpace.orthonormal(2).bilinear([1], [1, 0])


def test_ortho_complement_examples():
    q3 = QuadraticSpace.orthonormal(3)
    assert ortho_complement(q3, Subspace(3, [e(3, 0)])) == Subspace.coordinate(3, [1, 2])
    assert ortho_complement(q3, Subspace.full(3)) == Subspace.zero(3)
    q2 = QuadraticSpace.orthonormal(2)
    assert ortho_complement(q2, Subspace(2, [[1, 1]])) == Subspace(2, [[1, -1]])


def test_nondegenerate_examples():
    q2 = QuadraticSpace.orthonormal(2)
    assert is_nondegenerate_on(q2, Subspace.full(2))
    iso = Subspace(2, [[ONE, Scalar(0, 1)]])
    assert q2.quad([ONE, Scalar(0, 1)]) == ZERO
    assert not is_nondegenerate_on(q2, iso)
    assert is_nondegenerate_on(q2, Subspace.zero(2))


def random_subspace(rng, n):
    k = rng.randint(0, n)
    return Subspace(n, [[random_scalar(rng, 2, 2) for _ in range(n)] for _ in range(k)])


def test_orthogonal_decomposition_random(rng):
    checked = 0
    for _ in range(150):
        n = rng.randint(1, 8)
        q = QuadraticSpace.orthonormal(n)
        U = random_subspace(rng, n)
        perp = q.ortho_complement(U)
        assert perp.dim + U.dim == n
        assert q.ortho_complement(perp) == U
        if q.is_nondegenerate_on(U):
            checked += 1
            assert U.intersect(perp).dim == 0
            assert (U + perp).dim == n
    assert checked > 50


def test_subspace_canonical_form():
    a = Subspace(3, [[1, 2, 0], [0, 1, 1]])
    b = Subspace(3, [[1, 3, 1], [2, 4, 0]])
    assert a == b and hash(a) == hash(b)
    assert a.contains([3, 7, 1])
    assert not a.contains([0, 0, 1])


def test_intersection():
    a = Subspace.coordinate(3, [0, 1])
    b = Subspace.coordinate(3, [1, 2])
    assert a.intersect(b) == Subspace.coordinate(3, [1])


def test_pivot_complement():
    s = Subspace(3, [[1, 1, 0]])
    c = s.pivot_complement()
    assert c == Subspace.coordinate(3, [1, 2])
    assert (s + c).dim == 3


def test_form_validation():
    with pytest.raises(ValueError):
        QuadraticSpace((ONE, ZERO))
    QuadraticSpace((Scalar(4), Scalar(-1))).require_square_diagonal()
    with pytest.raises(NonSquareForm):
        QuadraticSpace((ONE, Scalar(2))).require_square_diagonal()


def test_to_json():
    assert Subspace(2, [[Scalar(1), Scalar(0, 1)]]).to_json() == [["1", "i"]]
