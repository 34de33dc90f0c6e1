"""Exact Gaussian rationals, the coefficient field of the algebra."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = ["GaussianRational", "ONE", "ZERO", "I", "as_coeff", "parse_coeff"]


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable and hash like the rational they equal when the
    imaginary part vanishes, so ``GaussianRational(3) == 3`` holds and both
    may share dictionary slots.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        z = object.__new__(cls)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational._raw(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|z|**2``, always rational."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational._raw(Fraction(x), Fraction(0))
    if isinstance(x, complex):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    return NotImplemented


def as_coeff(x) -> GaussianRational:
    z = _coerce(x)
    if z is NotImplemented:
        raise TypeError(f"cannot use {x!r} as a coefficient")
    return z


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_COEFF_RE = re.compile(rf"^(?P<re>{_RAT})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)i)?$")
_PURE_IM_RE = re.compile(rf"^(?P<im>{_RAT})i$")


def _rational(text: str) -> Fraction:
    q = Fraction(text)
    if "/" in text and text.split("/")[1].strip("0") == "":
        raise ZeroDivisionError(text)
    return q


def parse_coeff(text: str, line: int = 1, column: int = 1) -> GaussianRational:
    """Parse ``p/q``, ``p/q+r/si`` or ``p/q-r/si`` (also a bare ``r/si``)."""
    text = text.strip()
    try:
        m = _COEFF_RE.match(text)
        if m:
            re_part = _rational(m["re"])
            im_part = Fraction(0)
            if m["im"] is not None:
                im_part = _rational(m["im"])
                if m["sign"] == "-":
                    im_part = -im_part
            return GaussianRational._raw(re_part, im_part)
        m = _PURE_IM_RE.match(text)
        if m:
            return GaussianRational._raw(Fraction(0), _rational(m["im"]))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}", line, column) from None
    raise ParseError(f"bad coefficient {text!r}", line, column)
