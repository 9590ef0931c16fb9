import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffinner.scalars import I, ONE, ZERO, Scalar, add, inv, mul, parse_scalar, render_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
scalars = st.builds(Scalar, rationals, rationals)


def S(re, im=0):
    return Scalar(Fraction(re), Fraction(im))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (S("1/2"), S("1/3"), S("5/6")),
        (S(0, 1), S(0, -1), S(0)),
        (S("2/3", "1/5"), S("1/3", "-1/5"), S(1)),
    ],
)
def test_add_examples(a, b, expected):
    assert add(a, b) == expected


def test_mul_examples():
    assert mul(I, I) == S(-1)
    x = S("3/7", "-2")
    assert mul(ONE, x) == x
    assert mul(S(1, 1), S(1, -1)) == S(2)


def test_inv_examples():
    assert inv(S(2)) == S("1/2")
    assert inv(I) == S(0, -1)
    assert inv(S(1, 1)) == S("1/2", "-1/2")


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inv(ZERO)


def test_field_axioms_random():
    rng = random.Random(0)

    def r():
        return Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    for _ in range(10_000):
        a, b, c = r(), r(), r()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if a:
            assert a * a.inverse() == ONE


def _is_canonical(q):
    return type(q) is int or (type(q) is Fraction and q.denominator > 1)


@given(scalars, scalars)
def test_results_are_canonical(a, b):
    for r in (a + b, a - b, a * b, -a):
        assert _is_canonical(r.re) and _is_canonical(r.im)
        assert Scalar(r.re, r.im) == r
    if b:
        q = a / b
        assert _is_canonical(q.re) and _is_canonical(q.im)


@given(scalars)
def test_render_parse_round_trip(x):
    assert parse_scalar(render_scalar(x)) == x


@pytest.mark.parametrize(
    "text, expected",
    [
        ("i", S(0, 1)),
        (" -i ", S(0, -1)),
        ("1/2", S("1/2")),
        ("3/4+1/2*i", S("3/4", "1/2")),
        ("3/4 - 1/2 * i", S("3/4", "-1/2")),
        ("+1", S(1)),
        ("-1", S(-1)),
        ("2i", S(0, 2)),
        ("6/4", S("3/2")),
    ],
)
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1+", "i+i", "1/0", "1 2", "1/2/3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_render_forms():
    assert render_scalar(S("1/2", "1/3")) == "1/2+1/3*i"
    assert render_scalar(S(0, -1)) == "-i"
    assert render_scalar(S("-2/4")) == "-1/2"
    assert render_scalar(ZERO) == "0"


def test_sqrt():
    for x in [S(4), S(-9), S(0, 2), S(3, 4), S("9/16", 0)]:
        r = x.sqrt()
        assert r is not None and r * r == x
    assert S(2).sqrt() is None
    assert S(0, 1).sqrt() is None


def test_immutable_and_hashable():
    x = S(1, 2)
    with pytest.raises(AttributeError):
        x.re = 3
    assert {x: 1}[S(1, 2)] == 1
    assert hash(S(3)) == hash(3)
