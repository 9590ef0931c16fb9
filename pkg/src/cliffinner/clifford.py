"""Finite Clifford algebras Cl(V_n) on a diagonal basis.

A blade is an ``int`` whose set bits are the generator indices of the
ascending product v_{i1}...v_{ik}; 0 is the identity. A :class:`Multivector`
is an immutable sparse map blade -> Scalar, iterated in blade order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import linalg
from .errors import DimensionMismatch, GeneratorCapExceeded, NotInvertible
from .scalars import ONE, ZERO, Scalar, as_scalar, render_scalar

MAX_GENERATORS = 62

__all__ = [
    "MAX_GENERATORS",
    "Multivector",
    "blade_mul",
    "reorder_sign",
    "mv_mul",
    "grade_project",
    "mv_inverse",
    "basis_blades",
    "parse_multivector",
    "render_multivector",
]


def blade_indices(blade: int) -> list[int]:
    out = []
    i = 0
    while blade:
        if blade & 1:
            out.append(i)
        blade >>= 1
        i += 1
    return out


def blade_from_indices(indices: Iterable[int]) -> int:
    b = 0
    for i in indices:
        b |= 1 << i
    return b


def grade(blade: int) -> int:
    return blade.bit_count()


def reorder_sign(a: int, b: int) -> int:
    """Sign (+1/-1) picked up by sorting the concatenation of blades a and b.

    For each generator j of b, count the generators of a above j.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_mul(a: int, b: int, form: Sequence[Scalar] | None = None) -> tuple[Scalar, int]:
    """Product of two blades as (coefficient, blade).

    ``form`` lists f(v_i) for each generator; None means all ones.
    """
    sign = reorder_sign(a, b)
    coeff = ONE if sign > 0 else -ONE
    common = a & b
    if common and form is not None:
        for i in blade_indices(common):
            coeff = coeff * form[i]
    return coeff, a ^ b


def basis_blades(n: int) -> range:
    """All 2**n blades of Cl(V_n), in encoding order."""
    return range(1 << n)


def blades_of_parity(n: int, parity: int) -> list[int]:
    return [b for b in range(1 << n) if b.bit_count() % 2 == parity]


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("generator count must be non-negative")
    if n > MAX_GENERATORS:
        raise GeneratorCapExceeded(f"n = {n} exceeds the cap of {MAX_GENERATORS} generators")


class Multivector:
    """Element of Cl(V_n). Zero coefficients are never stored."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None):
        _check_n(n)
        clean = {}
        if terms:
            limit = 1 << n
            for blade in sorted(terms):
                if blade < 0 or blade >= limit:
                    raise DimensionMismatch(f"blade {blade:#b} does not live in Cl(V_{n})")
                c = as_scalar(terms[blade])
                if c:
                    clean[blade] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Multivector":
        # terms must already be sorted, nonzero, in range
        obj = cls.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # constructors

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls(n)

    @classmethod
    def scalar(cls, n: int, c=1) -> "Multivector":
        return cls(n, {0: c})

    @classmethod
    def generator(cls, n: int, i: int, c=1) -> "Multivector":
        if not 0 <= i < n:
            raise DimensionMismatch(f"generator v_{i} does not exist in Cl(V_{n})")
        return cls(n, {1 << i: c})

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], c=1) -> "Multivector":
        """The product of generators in the given order (need not be ascending)."""
        idx = list(indices)
        if any(not 0 <= i < n for i in idx):
            raise DimensionMismatch(f"index out of range for Cl(V_{n})")
        out = cls.scalar(n, c)
        for i in idx:
            out = out * cls.generator(n, i)
        return out

    @classmethod
    def vector(cls, coords: Sequence) -> "Multivector":
        n = len(coords)
        return cls(n, {1 << i: c for i, c in enumerate(coords)})

    # mapping access

    @property
    def terms(self) -> Mapping[int, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def blades(self) -> list[int]:
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __getitem__(self, blade: int) -> Scalar:
        return self._terms.get(blade, ZERO)

    def coefficient(self, blade: int) -> Scalar:
        return self._terms.get(blade, ZERO)

    def __bool__(self):
        return bool(self._terms)

    def is_scalar(self) -> bool:
        return all(b == 0 for b in self._terms)

    def scalar_part(self) -> Scalar:
        return self._terms.get(0, ZERO)

    def support(self) -> int:
        """OR of all blades: the generators this element actually uses."""
        s = 0
        for b in self._terms:
            s |= b
        return s

    def coords(self, blades: Sequence[int] | None = None) -> list[Scalar]:
        if blades is None:
            blades = basis_blades(self.n)
        return [self._terms.get(b, ZERO) for b in blades]

    @classmethod
    def from_coords(cls, n: int, coords: Sequence[Scalar], blades: Sequence[int] | None = None):
        if blades is None:
            blades = basis_blades(n)
        return cls(n, {b: c for b, c in zip(blades, coords) if c})

    def with_n(self, n: int) -> "Multivector":
        """Re-embed into Cl(V_n); shrinking requires the support to fit."""
        _check_n(n)
        if self.support() >> n:
            raise DimensionMismatch(f"element uses generators beyond v_{n - 1}")
        return Multivector._raw(n, dict(self._terms))

    # grading

    def even(self) -> "Multivector":
        return grade_project(self, "even")

    def odd(self) -> "Multivector":
        return grade_project(self, "odd")

    def parity(self) -> int | None:
        """0 or 1 if homogeneous, None if mixed; 0 for the zero element."""
        ps = {b.bit_count() & 1 for b in self._terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    # arithmetic

    def _same_n(self, other: "Multivector"):
        if self.n != other.n:
            raise DimensionMismatch(f"Cl(V_{self.n}) vs Cl(V_{other.n})")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            try:
                other = Multivector.scalar(self.n, as_scalar(other))
            except TypeError:
                return NotImplemented
        self._same_n(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            s = out.get(b, ZERO) + c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        return Multivector._raw(self.n, dict(sorted(out.items())))

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.n, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            try:
                other = Multivector.scalar(self.n, as_scalar(other))
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Multivector":
        c = as_scalar(c)
        if not c:
            return Multivector._raw(self.n, {})
        return Multivector._raw(self.n, {b: x * c for b, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            return self * mv_inverse(other)
        return self.scale(as_scalar(other).inverse())

    def inverse(self) -> "Multivector":
        return mv_inverse(self)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.n == other.n and self._terms == other._terms
        try:
            other = as_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not other:
            return not self._terms
        return self._terms == {0: other}

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, tuple(self._terms.items()))))
        return self._hash

    def __str__(self):
        return render_multivector(self)

    def __repr__(self):
        return f"Multivector({self.n}, {render_multivector(self)!r})"


# products


def _numerators(mv: Multivector) -> tuple[int, list[tuple[int, int, int]]]:
    den = 1
    for c in mv._terms.values():
        den = lcm(den, c.re.denominator, c.im.denominator)
    rows = []
    for b, c in mv._terms.items():
        rows.append((b, c.re.numerator * (den // c.re.denominator), c.im.numerator * (den // c.im.denominator)))
    return den, rows


_DENSE_THRESHOLD = 4096


def mv_mul(a: Multivector, b: Multivector, form: Sequence[Scalar] | None = None) -> Multivector:
    """Bilinear extension of :func:`blade_mul`; ``form`` None means orthonormal."""
    if a.n != b.n:
        raise DimensionMismatch(f"Cl(V_{a.n}) vs Cl(V_{b.n})")
    n = a.n
    if not a._terms or not b._terms:
        return Multivector._raw(n, {})
    if form is not None and all(x == ONE for x in form):
        form = None
    if form is not None:
        return _mul_general(a, b, form)
    da, ta = _numerators(a)
    db, tb = _numerators(b)
    if len(ta) * len(tb) >= _DENSE_THRESHOLD and len(ta) > 16 and len(tb) > 16:
        acc = _mul_dense(ta, tb, max(a.support(), b.support()).bit_length())
    else:
        acc = _mul_sparse(ta, tb)
    den = da * db
    out = {}
    for blade in sorted(acc):
        re_, im = acc[blade]
        if re_ or im:
            if den == 1:
                out[blade] = Scalar._make(re_, im)
            else:
                out[blade] = Scalar._make(Fraction(re_, den), Fraction(im, den))
    return Multivector._raw(n, out)


def _mul_sparse(ta, tb) -> dict[int, list[int]]:
    acc: dict[int, list[int]] = {}
    for ba, ar, ai in ta:
        for bb, br, bi in tb:
            # inline reorder_sign
            swaps = 0
            x = ba >> 1
            while x:
                swaps += (x & bb).bit_count()
                x >>= 1
            re_ = ar * br - ai * bi
            im = ar * bi + ai * br
            if swaps & 1:
                re_, im = -re_, -im
            key = ba ^ bb
            slot = acc.get(key)
            if slot is None:
                acc[key] = [re_, im]
            else:
                slot[0] += re_
                slot[1] += im
    return acc


def _mul_dense(ta, tb, nbits: int) -> dict[int, list[int]]:
    # Vectorised over the terms of b; exact because the dtype is chosen from a
    # magnitude bound (int64) or falls back to Python ints (object).
    max_a = max(max(abs(r), abs(i)) for _, r, i in ta)
    max_b = max(max(abs(r), abs(i)) for _, r, i in tb)
    bound = 2 * max_a * max_b * len(ta)
    dtype = np.int64 if bound < (1 << 62) else object
    bb = np.array([t[0] for t in tb], dtype=np.int64)
    br = np.array([t[1] for t in tb], dtype=dtype)
    bi = np.array([t[2] for t in tb], dtype=dtype)
    bits = ((bb[:, None] >> np.arange(nbits, dtype=np.int64)[None, :]) & 1).astype(np.int64)
    size = 1 << nbits
    cre = np.zeros(size, dtype=dtype)
    cim = np.zeros(size, dtype=dtype)
    shifts = np.arange(1, nbits + 1, dtype=np.int64)
    for ba, ar, ai in ta:
        # parity of sum over j in b of popcount(a >> (j+1))
        above = np.array([(ba >> int(s)).bit_count() & 1 for s in shifts], dtype=np.int64)
        odd = (bits @ above) & 1
        sgn = 1 - 2 * odd
        if dtype is object:
            sgn = sgn.astype(object)
        idx = ba ^ bb
        cre[idx] += sgn * (ar * br - ai * bi)
        cim[idx] += sgn * (ar * bi + ai * br)
    nz = np.flatnonzero((cre != 0) | (cim != 0))
    return {int(k): [int(cre[k]), int(cim[k])] for k in nz}


def _mul_general(a: Multivector, b: Multivector, form: Sequence[Scalar]) -> Multivector:
    if len(form) < a.n:
        raise DimensionMismatch("form must give f(v_i) for every generator")
    acc: dict[int, Scalar] = {}
    for ba, ca in a._terms.items():
        for bb, cb in b._terms.items():
            k, blade = blade_mul(ba, bb, form)
            acc[blade] = acc.get(blade, ZERO) + k * ca * cb
    return Multivector(a.n, acc)


def grade_project(a: Multivector, parity: str | int) -> Multivector:
    """Keep the blades of even (``"even"``/0) or odd (``"odd"``/1) grade."""
    if parity in ("even", 0):
        p = 0
    elif parity in ("odd", 1):
        p = 1
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return Multivector._raw(a.n, {b: c for b, c in a._terms.items() if b.bit_count() & 1 == p})


def left_regular_matrix(a: Multivector, n: int | None = None, form=None) -> list[list[Scalar]]:
    """Matrix of x -> a*x on Cl(V_n) in the blade basis (column j = a*e_j)."""
    n = a.n if n is None else n
    dim = 1 << n
    cols = []
    for bb in range(dim):
        col = [ZERO] * dim
        for ba, ca in a._terms.items():
            k, blade = blade_mul(ba, bb, form)
            col[blade] = col[blade] + k * ca
        cols.append(col)
    return linalg.transpose(cols)


def mv_inverse(a: Multivector, form: Sequence[Scalar] | None = None) -> Multivector:
    """Two-sided inverse via the left-regular representation.

    The solve runs in the subalgebra generated by the generators that ``a``
    actually uses; an inverse of an element of a finite-dimensional
    subalgebra lies in that subalgebra.
    """
    if not a:
        raise NotInvertible("zero has no inverse")
    if a.is_scalar():
        return Multivector.scalar(a.n, a.scalar_part().inverse())
    m = a.support().bit_length()
    local = Multivector._raw(m, dict(a._terms))
    lf = None if form is None else list(form)[:m]
    mat = left_regular_matrix(local, m, lf)
    rhs = [ONE] + [ZERO] * ((1 << m) - 1)
    x = linalg.solve(mat, rhs)
    if x is None:
        raise NotInvertible(f"{a} is a zero divisor")
    inv = Multivector.from_coords(m, x).with_n(a.n)
    one = Multivector.scalar(a.n)
    if mv_mul(inv, a, form) != one or mv_mul(a, inv, form) != one:
        raise NotInvertible(f"{a} has only a one-sided inverse")
    return inv


# text form


def render_multivector(a: Multivector) -> str:
    """Terms in blade order, e.g. ``1/2 + 1/2*e0e1``; zero renders as ``0``."""
    if not a._terms:
        return "0"
    parts = []
    for blade, c in a._terms.items():
        name = "".join(f"e{i}" for i in blade_indices(blade))
        cs = render_scalar(c)
        if c.re and c.im:
            cs = f"({cs})"
        if not blade:
            term = cs
        elif c == ONE:
            term = name
        elif c == -ONE:
            term = "-" + name
        else:
            term = f"{cs}*{name}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<blade>(?:e\d+)+)|(?P<i>i)|(?P<op>[-+*()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at position {pos} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m[kind]))
    return out


class _Parser:
    def __init__(self, tokens, n, form):
        self.toks = tokens
        self.pos = 0
        self.n = n
        self.form = form

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        kind, val = self.peek()
        neg = False
        if kind == "op" and val in "+-":
            self.take()
            neg = val == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = mv_mul(acc, self.factor(), self.form)
            elif kind in ("num", "blade", "i") or (kind == "op" and val == "("):
                acc = mv_mul(acc, self.factor(), self.form)
            else:
                return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            return Multivector.scalar(self.n, Fraction(val))
        if kind == "i":
            return Multivector.scalar(self.n, Scalar(0, 1))
        if kind == "blade":
            out = Multivector.scalar(self.n)
            for idx in re.findall(r"\d+", val):
                i = int(idx)
                if i >= self.n:
                    raise DimensionMismatch(f"e{i} does not exist in Cl(V_{self.n})")
                out = mv_mul(out, Multivector.generator(self.n, i), self.form)
            return out
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("missing closing parenthesis")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")


def parse_multivector(text: str, n: int | None = None, form: Sequence[Scalar] | None = None) -> Multivector:
    """Parse sums of products of numbers, ``i``, blades ``e0e1`` and parentheses.

    Blades are read as Clifford products, so ``e1e0`` parses to ``-e0e1``.
    ``n`` defaults to one more than the highest generator index mentioned.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty multivector string")
    if n is None:
        idx = [int(i) for kind, val in tokens if kind == "blade" for i in re.findall(r"\d+", val)]
        n = max(idx) + 1 if idx else 0
    p = _Parser(tokens, n, form)
    out = p.expr()
    if p.pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out
