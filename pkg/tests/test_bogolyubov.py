import random

import pytest

from cliffinner.bogolyubov import (
    BogolyubovAction,
    apply,
    check_automorphism,
    conjugate,
    fixes_bivector,
    lemma3_witness_check,
)
from cliffinner.clifford import Multivector, parse_multivector
from cliffinner.errors import DependentVectors, DimensionMismatch, NotOrthogonal
from cliffinner.families import random_map
from cliffinner.finitary import FinitaryOrthogonal
from cliffinner.selftest import bivector_sweep
from cliffinner.scalars import ONE, ZERO, Scalar

from conftest import random_multivector, random_scalar

ROT = FinitaryOrthogonal([[0, -1], [1, 0]], 1)
SWAP = FinitaryOrthogonal([[0, 1], [1, 0]], 1)
SHEAR = FinitaryOrthogonal([[1, 1], [0, 1]], 1)


def mv(text, n):
    return parse_multivector(text, n)


def test_minus_identity_fixes_even_blade():
    act = BogolyubovAction(FinitaryOrthogonal([], -1), 2)
    assert apply(act, mv("e0e1", 2)) == mv("e0e1", 2)
    assert act(mv("e0 + 3", 2)) == mv("3 - e0", 2)


def test_worked_example_on_v1():
    act = BogolyubovAction(FinitaryOrthogonal([[1]], -1), 3)
    v0, v1 = Multivector.generator(3, 0), Multivector.generator(3, 1)
    assert act(v1) == -v1 == v0.inverse() * v1 * v0


def test_rotation_images():
    act = BogolyubovAction(ROT, 2)
    assert act(mv("e0", 2)) == mv("e1", 2)
    assert act(mv("e1", 2)) == mv("-e0", 2)
    assert act(mv("e0e1", 2)) == mv("e0e1", 2)


def test_dimension_mismatch():
    act = BogolyubovAction(ROT, 3)
    with pytest.raises(DimensionMismatch):
        act(Multivector.generator(2, 0))
    with pytest.raises(DimensionMismatch):
        BogolyubovAction(ROT, 1)


def test_non_orthogonal_rejected_by_default():
    with pytest.raises(NotOrthogonal):
        BogolyubovAction(SHEAR, 2)


def pairs(rng, n, count):
    return [(random_multivector(rng, n, 4), random_multivector(rng, n, 4)) for _ in range(count)]


def test_check_automorphism_identity_and_random(rng):
    assert check_automorphism(BogolyubovAction(FinitaryOrthogonal([], 1), 4), pairs(rng, 4, 20))
    for _ in range(5):
        p = random_map(rng, max_m=4)
        act = BogolyubovAction(p, p.m + 1)
        assert check_automorphism(act, pairs(rng, act.n, 100))


def test_check_automorphism_detects_shear():
    act = BogolyubovAction(SHEAR, 2, check=False)
    # phi(v1) = v0 + v1 squares to 2, but v1^2 = 1
    v1 = Multivector.generator(2, 1)
    assert not check_automorphism(act, [(v1, v1)])


def test_functoriality(rng):
    for _ in range(20):
        p, q = random_map(rng, max_m=3), random_map(rng, max_m=3)
        n = max(p.m, q.m) + 1
        pq = BogolyubovAction(p.compose(q), n)
        ap, aq = BogolyubovAction(p, n), BogolyubovAction(q, n)
        a = random_multivector(rng, n, 5)
        assert pq(a) == ap(aq(a))


def test_grading_preserved(rng):
    for _ in range(30):
        p = random_map(rng, max_m=4)
        act = BogolyubovAction(p, 4)
        a = random_multivector(rng, 4, 6)
        assert act(a.even()) == act(a).even()
        assert act(a.odd()) == act(a).odd()


def test_quadratic_relation(rng):
    for _ in range(50):
        p = random_map(rng, max_m=4)
        n = 5
        act = BogolyubovAction(p, n)
        coords = [random_scalar(rng) for _ in range(n)]
        v = Multivector.vector(coords)
        fv = sum((c * c for c in coords), ZERO)
        img = act(v)
        assert img * img == Multivector.scalar(n, fv)


def unit(n, i):
    return [ONE if j == i else ZERO for j in range(n)]


def test_fixed_bivector_examples():
    rot = BogolyubovAction(ROT, 2)
    assert fixes_bivector(rot, unit(2, 0), unit(2, 1))
    assert lemma3_witness_check(rot, unit(2, 0), unit(2, 1))
    swap = BogolyubovAction(SWAP, 2)
    assert not fixes_bivector(swap, unit(2, 0), unit(2, 1))
    assert lemma3_witness_check(swap, unit(2, 0), unit(2, 1))
    ident = BogolyubovAction(FinitaryOrthogonal([], 1), 3)
    assert lemma3_witness_check(ident, [1, 2, 0], [0, 1, Scalar(0, 1)])


def test_fixes_bivector_matches_full_action():
    act = BogolyubovAction(ROT, 3)
    for v1, v2 in [(unit(3, 0), unit(3, 1)), (unit(3, 0), unit(3, 2))]:
        b = Multivector.vector(v1) * Multivector.vector(v2)
        assert fixes_bivector(act, v1, v2) == (act(b) == b)


def test_bivector_check_rejects_dependent():
    act = BogolyubovAction(ROT, 2)
    with pytest.raises(DependentVectors):
        lemma3_witness_check(act, [1, 1], [2, 2])
    with pytest.raises(DimensionMismatch):
        lemma3_witness_check(act, [1], [0])


def test_bivector_small_exhaustive():
    maps, checks, hits, bad = bivector_sweep(max_n=3)
    assert bad == 0 and hits > 0 and maps > 0


def test_conjugate():
    x = mv("1 + e0e1", 2)
    assert conjugate(x, Multivector.scalar(2, 5)) == Multivector.scalar(2, 5)
    assert conjugate(x, mv("e0", 2), x.inverse()) == x * mv("e0", 2) * x.inverse()
