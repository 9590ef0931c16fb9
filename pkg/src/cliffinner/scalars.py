"""Exact Gaussian rationals, the ground field Q(i).

Components are canonical rationals (``int`` or lowest-terms ``Fraction``),
so equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

__all__ = ["Scalar", "ZERO", "ONE", "I", "add", "mul", "inv", "parse_scalar", "as_scalar"]


def _norm(x):
    """Canonical rational: a plain int when integral, else a Fraction."""
    t = type(x)
    if t is int:
        return x
    if t is Fraction:
        return x.numerator if x.denominator == 1 else x
    if t is bool:
        return int(x)
    if isinstance(x, int):
        return int(x)
    if isinstance(x, _RationalABC):
        return _norm(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return _norm(Fraction(x.strip()))
    raise TypeError(f"cannot use {t.__name__} as a rational component")


class Scalar(tuple):
    """An element re + im*i of Q(i). Immutable and hashable.

    Components are canonical rationals: ``int`` when integral, otherwise a
    ``Fraction`` in lowest terms with positive denominator. Both expose
    ``numerator`` and ``denominator``.
    """

    __slots__ = ()

    def __new__(cls, re=0, im=0):
        return tuple.__new__(cls, (_norm(re), _norm(im)))

    @classmethod
    def _make(cls, re, im):
        return tuple.__new__(cls, (_norm(re), _norm(im)))

    @property
    def re(self):
        return self[0]

    @property
    def im(self):
        return self[1]

    # arithmetic

    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b = self
        c, d = other
        return _make(a + c, b + d)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b = self
        c, d = other
        return _make(a - c, b - d)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        a, b = self
        return _make(-a, -b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b = self
        c, d = other
        if not b and not d:
            return _make(a * c, 0)
        return _make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self
        norm = a * a + b * b
        if not norm:
            raise ZeroDivisionError("inverse of the zero scalar")
        return _make(Fraction(a) / norm, Fraction(-b) / norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return _make(self[0], -self[1])

    # predicates

    def __bool__(self):
        return bool(self[0]) or bool(self[1])

    def __eq__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return False
        return self[0] == other[0] and self[1] == other[1]

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if not self[1]:
            return hash(self[0])
        return hash((self[0], self[1]))

    def __lt__(self, other):
        return NotImplemented

    __le__ = __gt__ = __ge__ = __lt__

    def __getnewargs__(self):
        return (self[0], self[1])

    @property
    def is_real(self) -> bool:
        return not self[1]

    def sqrt(self) -> "Scalar | None":
        """Return some s in Q(i) with s*s == self, or None if self is not a square."""
        a, b = Fraction(self[0]), Fraction(self[1])
        if not b:
            r = _rational_sqrt(abs(a))
            if r is None:
                return None
            return Scalar(r) if a >= 0 else Scalar(0, r)
        modulus = _rational_sqrt(a * a + b * b)
        if modulus is None:
            return None
        x = _rational_sqrt((a + modulus) / 2)
        if not x:
            return None
        s = Scalar(x, b / (2 * x))
        return s if s * s == self else None

    # text

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return f"Scalar({render_scalar(self)!r})"


_make = Scalar._make


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, _RationalABC)):
        return Scalar(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and scalar strings to Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to Scalar")
    return s


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inv(a: Scalar) -> Scalar:
    return a.inverse()


def render_scalar(s: Scalar) -> str:
    """Render as ``a/b``, ``c/d*i`` or ``a/b+c/d*i`` in lowest terms."""
    re_, im = s
    if not im:
        return str(re_)
    if im == 1:
        im_txt = "i"
    elif im == -1:
        im_txt = "-i"
    else:
        im_txt = f"{im}*i"
    if not re_:
        return im_txt
    if im_txt.startswith("-"):
        return f"{re_}{im_txt}"
    return f"{re_}+{im_txt}"


_NUM = r"\d+(?:/\d+)?"
_IMAG_RE = re.compile(rf"^(?P<sign>[+-])\s*(?:(?P<coef>{_NUM})\s*\*?\s*)?i$")
_REAL_RE = re.compile(rf"^(?P<sign>[+-])\s*(?P<num>{_NUM})$")
_PART_SPLIT = re.compile(r"(?<=[0-9i\s])(?=[+-])")


def parse_scalar(text: str) -> Scalar:
    """Parse the rendering of :func:`render_scalar`.

    Whitespace is ignored, a leading ``+`` is allowed, ``i`` alone means
    (0, 1), and ``2i`` is accepted as a shorthand for ``2*i``.
    """
    src = text.strip()
    if not src:
        raise ValueError("empty scalar string")
    if src[0] not in "+-":
        src = "+" + src
    parts = [p.strip() for p in _PART_SPLIT.split(src) if p.strip()]
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_re = seen_im = False
    for part in parts:
        m = _REAL_RE.match(part)
        if m and not seen_re:
            val = _parse_fraction(m["num"], text)
            re_part = -val if m["sign"] == "-" else val
            seen_re = True
            continue
        m = _IMAG_RE.match(part)
        if m and not seen_im:
            val = _parse_fraction(m["coef"], text) if m["coef"] else Fraction(1)
            im_part = -val if m["sign"] == "-" else val
            seen_im = True
            continue
        raise ValueError(f"malformed scalar string {text!r}")
    return Scalar(re_part, im_part)


def _parse_fraction(token: str, text: str) -> Fraction:
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
