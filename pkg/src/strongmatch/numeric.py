"""Scalar policy shared by every predicate.

Float mode compares with an absolute tolerance ``EPS``.  Exact mode keeps
coordinates as :class:`fractions.Fraction` and triangle functionals as
:class:`QSqrt3` numbers ``a + b*sqrt(3)`` with rational ``a`` and ``b``, so
every comparison is decided without rounding.
"""

import math
from decimal import Decimal
from fractions import Fraction

EPS = 1e-9
SQRT3 = math.sqrt(3.0)


class QSqrt3:
    """Element of Q(sqrt 3), stored as a + b*sqrt(3)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(other):
        if isinstance(other, QSqrt3):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt3(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return float(self) + other
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return float(self) - other
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return other - float(self)
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return float(self) * other
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return float(self) / other
        # multiply by the conjugate
        den = o.a * o.a - 3 * o.b * o.b
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        num = self * QSqrt3(o.a, -o.b)
        return QSqrt3(num.a / den, num.b / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return other / float(self)
        return o / self

    def sign(self):
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        d = self.a * self.a - 3 * self.b * self.b
        return sa if d > 0 else (-sa if d < 0 else 0)

    def _cmp(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            f = float(self)
            return (f > other) - (f < other)
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, (QSqrt3, int, Fraction, float)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT3

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        return f"QSqrt3({self.a}, {self.b})"


ROOT3 = QSqrt3(0, 1)


def is_exact(x):
    return isinstance(x, (int, Fraction, QSqrt3))


def tol(*xs):
    """Tolerance for a comparison among ``xs``: zero when all are exact."""
    for x in xs:
        if not is_exact(x):
            return EPS
    return 0


def sqrt3_for(x):
    return ROOT3 if is_exact(x) else SQRT3


def half(x):
    return x / 2 if not isinstance(x, int) else Fraction(x, 2)


def to_float(x):
    return float(x)


def parse_number(token, exact=False):
    """Decimal literal to float, or to an exact Fraction in exact mode."""
    if exact:
        return Fraction(Decimal(token))
    value = float(token)
    if not math.isfinite(value):
        raise ValueError(f"non-finite coordinate {token!r}")
    return value


def format_number(x, places=12):
    """Fixed-point decimal text used by point files."""
    if isinstance(x, Fraction):
        d = Decimal(x.numerator) / Decimal(x.denominator)
        text = format(d.quantize(Decimal(1).scaleb(-places)), "f")
    else:
        text = format(float(x), f".{places}f")
    if text.startswith("-") and float(text) == 0:
        text = text[1:]
    return text
