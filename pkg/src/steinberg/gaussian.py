"""Exact arithmetic in the Gaussian rationals Q(i)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational


class GaussianRational:
    """(a + b i) / d with integers a, b, d; d > 0 and gcd(a, b, d) == 1."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._a = re.numerator * (d // re.denominator)
        self._b = im.numerator * (d // im.denominator)
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d != 1:
            g = gcd(a, b, d)
            if g != 1:
                a //= g
                b //= g
                d //= g
        z = object.__new__(cls)
        z._a = a
        z._b = b
        z._d = d
        return z

    @classmethod
    def from_list(cls, parts) -> "GaussianRational":
        """Build from ``[re_num, re_den, im_num, im_den]``."""
        if len(parts) != 4:
            raise ValueError(f"expected 4 integers, got {parts!r}")
        rn, rd, in_, id_ = (int(p) for p in parts)
        return cls(Fraction(rn, rd), Fraction(in_, id_))

    def to_list(self) -> list[int]:
        re, im = self.re, self.im
        return [re.numerator, re.denominator, im.numerator, im.denominator]

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def numerator(self) -> tuple[int, int]:
        return self._a, self._b

    @property
    def denominator(self) -> int:
        return self._d

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._d == other._d:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, self._d)
        d1, d2 = self._d, other._d
        return GaussianRational._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._a, self._b, other._a, other._b
        return GaussianRational._raw(a * c - b * d, a * d + b * c, self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(i)")
        # (a+bi)/d1 / ((c+di)/d2) = (a+bi)(c-di) d2 / (d1 (c^2+d^2))
        a, b, c, d = self._a, self._b, other._a, other._b
        n2 = c * c + d * d
        den = self._d * n2
        re = (a * c + b * d) * other._d
        im = (b * c - a * d) * other._d
        if den < 0:
            re, im, den = -re, -im, -den
        return GaussianRational._raw(re, im, den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return _imag_str(im)
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{_imag_str(abs(im))}"

    def format(self, floating: bool = False) -> str:
        if not floating:
            return str(self)
        re, im = float(self.re), float(self.im)
        if im == 0:
            return f"{re:.12g}"
        return f"{re:.12g}{im:+.12g}i"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        x = Fraction(x)
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    if isinstance(x, complex):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    return NotImplemented


def gr(x) -> GaussianRational:
    """Coerce an int, Fraction, complex, or GaussianRational."""
    z = _coerce(x)
    if z is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")
    return z


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
