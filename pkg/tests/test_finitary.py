import itertools
import json
import random

import pytest

from cliffinner import linalg
from cliffinner.errors import InfiniteCodimension, InvalidArgument, InvalidComplement, NotOrthogonal
from cliffinner.families import random_map, random_orthogonal_block, small_maps
from cliffinner.finitary import (
    FinitaryOrthogonal,
    check_orthogonal,
    core_properties,
    eigen_data,
    eigenspace,
    image_of_shift,
    invariant_core,
    quotient_det_independence_check,
)
from cliffinner.quadratic import QuadraticSpace, Subspace
from cliffinner.scalars import ONE, ZERO, Scalar

from conftest import random_scalar

SWAP = [[0, 1], [1, 0]]
ROT = [[0, -1], [1, 0]]
PYTH = [["3/5", "-4/5"], ["4/5", "3/5"]]


def phi(block, tail=1):
    return FinitaryOrthogonal([[Scalar(x) if not isinstance(x, str) else Scalar(__import__("fractions").Fraction(x)) for x in r] for r in block], tail)


def test_check_orthogonal_examples():
    assert check_orthogonal(phi(ROT))
    assert not check_orthogonal(phi([[1, 1], [0, 1]]))
    b = phi(PYTH)
    assert check_orthogonal(b)
    m = [list(r) for r in b.block]
    assert linalg.matmul(linalg.transpose(m), m) == linalg.identity(2)


def test_eigen_data_examples():
    d = eigen_data(phi([[1]], -1), -1)
    assert (d.codim, d.quotient_det) == (1, ONE)
    d = eigen_data(phi([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 1)
    assert d.codim == 0 and d.quotient_det == ONE
    d = eigen_data(phi(SWAP), 1)
    assert d.codim == 1 and d.quotient_det == -ONE
    assert d.eigenspace == Subspace(2, [[1, 1]])


def test_swap_quotient_det_oracle():
    # det(B) = det(B on V(1)) * det(quotient) and B = 1 on V(1)
    p = phi(SWAP)
    assert linalg.det([list(r) for r in p.block]) == eigen_data(p, 1).quotient_det


def test_eigen_data_infinite_codimension():
    with pytest.raises(InfiniteCodimension) as info:
        eigen_data(phi([[1]], 1), -1)
    assert info.value.codim == float("inf")


def test_quotient_det_independence_examples():
    p = phi(SWAP)
    a = Subspace.coordinate(2, [0])
    b = Subspace(2, [[1, -1]])
    c = Subspace.coordinate(2, [1])
    assert quotient_det_independence_check(p, 1, a, b)
    assert quotient_det_independence_check(p, 1, b, c)
    ident = phi([[1, 0], [0, 1]])
    assert quotient_det_independence_check(ident, 1, Subspace.zero(2), Subspace.zero(2))
    r = phi(ROT)
    assert quotient_det_independence_check(r, 1, Subspace.full(2), Subspace(2, [[1, 1], [1, -1]]))
    with pytest.raises(InvalidComplement):
        quotient_det_independence_check(p, 1, Subspace(2, [[1, 1]]), a)


def test_quotient_det_independence_random(rng):
    for _ in range(40):
        p = random_map(rng, max_m=4)
        data = eigen_data(p, p.tail)
        e = data.eigenspace
        # random complement: perturb the pivot complement by vectors of V(alpha)
        comp = []
        for v in e.pivot_complement().basis:
            w = list(v)
            for f in e.basis:
                c = random_scalar(rng, 2, 2)
                w = [x + c * y for x, y in zip(w, f)]
            comp.append(w)
        assert quotient_det_independence_check(p, p.tail, e.pivot_complement(), Subspace(p.m, comp))


def test_invariant_core_examples():
    w = invariant_core(phi(SWAP))
    assert w == Subspace.full(2)
    w = invariant_core(phi([[1, 0], [0, 1]]))
    assert w.dim == 0
    p = phi([[1]], -1)
    w = invariant_core(p)
    assert w.n == 2 and w == Subspace.full(2)
    assert all(core_properties(p, w).values())


def test_invariant_core_random_both_tails(rng):
    for tail in (1, -1):
        for _ in range(40):
            p = FinitaryOrthogonal(random_orthogonal_block(rng, rng.randint(0, 5), rng.randint(1, 4)), tail)
            w = invariant_core(p)
            assert all(core_properties(p, w).values()), p


def test_invariant_core_small_maps():
    for p in small_maps(3):
        assert all(core_properties(p, invariant_core(p)).values())


def test_invariant_core_with_unipotent_part():
    # isotropic reflection pair gives a non-semisimple orthogonal map in dim 3
    u = [ONE, Scalar(0, 1), ONE]  # u.u = 1
    w = [ONE, ZERO, ZERO]
    from cliffinner.families import reflection

    b = linalg.matmul(reflection(u), reflection(w))
    p = FinitaryOrthogonal(b, 1)
    assert check_orthogonal(p)
    core = invariant_core(p)
    assert all(core_properties(p, core).values())


def test_adjoint_identity(rng):
    for _ in range(50):
        p = random_map(rng, max_m=4)
        q = QuadraticSpace.orthonormal(p.m)
        b = p.matrix()
        binv = p.inverse().matrix()
        assert linalg.matmul(b, binv) == linalg.identity(p.m)
        v1 = [random_scalar(rng) for _ in range(p.m)]
        v2 = [random_scalar(rng) for _ in range(p.m)]
        assert q.bilinear(linalg.matvec(b, v1), v2) == q.bilinear(v1, linalg.matvec(binv, v2))


def test_range_orthogonal_to_fixed_space(rng):
    for _ in range(50):
        p = random_map(rng, max_m=4)
        q = QuadraticSpace.orthonormal(p.m)
        img = image_of_shift(p, 1)
        fixed = eigenspace(p, 1)
        for a in img.basis:
            for f in fixed.basis:
                assert q.bilinear(a, f) == ZERO


def test_eigen_data_permutation_invariance(rng):
    for _ in range(30):
        p = random_map(rng, max_m=4)
        m = p.m
        perm = list(range(m))
        rng.shuffle(perm)
        pm = [[ONE if perm[i] == j else ZERO for j in range(m)] for i in range(m)]
        conj = linalg.matmul(linalg.matmul(pm, p.matrix()), linalg.transpose(pm))
        q = FinitaryOrthogonal(conj, p.tail)
        a, b = eigen_data(p, p.tail), eigen_data(q, q.tail)
        assert (a.codim, a.quotient_det) == (b.codim, b.quotient_det)


def test_empty_block_is_tail_identity():
    p = FinitaryOrthogonal([], -1)
    assert check_orthogonal(p) and p.is_minus_identity()
    assert eigen_data(p, -1).codim == 0
    assert p.matrix(3) == [[-ONE, ZERO, ZERO], [ZERO, -ONE, ZERO], [ZERO, ZERO, -ONE]]


def test_json_round_trip():
    p = phi(PYTH, -1)
    data = json.loads(json.dumps(p.to_json()))
    assert data == {"block": [["3/5", "-4/5"], ["4/5", "3/5"]], "tail": "-1"}
    assert FinitaryOrthogonal.from_json(data) == p
    assert FinitaryOrthogonal.from_json('{"block": [], "tail": "+1"}') == FinitaryOrthogonal([], 1)


@pytest.mark.parametrize(
    "bad",
    [
        {"block": [[1, 0]], "tail": "+1"},
        {"block": [], "tail": "0"},
        {"block": [], "tail": 2},
        {"tail": "+1"},
        {"block": "x", "tail": "+1"},
    ],
)
def test_json_rejects(bad):
    with pytest.raises(InvalidArgument):
        FinitaryOrthogonal.from_json(bad)


def test_invariant_core_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        invariant_core(phi([[1, 1], [0, 1]]))
