"""Exact coefficients a + b*sqrt(2) with rational a, b.

Zero-mode Clifford actions introduce a factor 1/sqrt(2); nothing else in the
in-scope computations leaves Q, so this quadratic extension is the whole
coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into QSqrt2")


@dataclass(frozen=True)
class QSqrt2:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    @classmethod
    def of(cls, x) -> "QSqrt2":
        if isinstance(x, QSqrt2):
            return x
        return cls(_frac(x), Fraction(0))

    @classmethod
    def _coerce(cls, x):
        try:
            return cls.of(x)
        except TypeError:
            return None

    def __add__(self, other):
        o = QSqrt2._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = QSqrt2._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = QSqrt2._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = QSqrt2._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(
            self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __truediv__(self, other):
        o = QSqrt2.of(other)
        norm = o.a * o.a - 2 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(2)]")
        return self * QSqrt2(o.a / norm, -o.b / norm)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        try:
            o = QSqrt2.of(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = "√2" if self.b == 1 else f"{self.b}√2"
        if self.b == -1:
            root = "-√2"
        if not self.a:
            return root
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        tail = "√2" if mag == 1 else f"{mag}√2"
        return f"{self.a}{sign}{tail}"

    __repr__ = __str__


ZERO = QSqrt2()
ONE = QSqrt2(Fraction(1))
SQRT2 = QSqrt2(Fraction(0), Fraction(1))
INV_SQRT2 = QSqrt2(Fraction(0), Fraction(1, 2))
