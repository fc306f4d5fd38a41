"""Exact scalars in Q or a real quadratic field Q(sqrt d)."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

Rational = Fraction | int


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@total_ordering
class Scalar:
    """An element a + b*sqrt(d) with rational a, b and square-free d >= 1.

    ``d == 1`` encodes plain rationals; ``b`` is then always 0.
    Instances are immutable and hashable.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: Rational = 0, b: Rational = 0, d: int = 1) -> None:
        if not is_squarefree(d):
            raise ValueError(f"d={d} is not a square-free integer >= 1")
        a = Fraction(a)
        b = Fraction(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def sqrt(cls, d: int) -> Scalar:
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is not rational")
        return self._a

    def simplify(self) -> Fraction | Scalar:
        """Return a Fraction when the value is rational, else self."""
        return self._a if self._b == 0 else self

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * self._d ** 0.5

    def _coerce(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other._d == self._d or other._b == 0:
                return other if other._d == self._d else Scalar(other._a, 0, self._d)
            if self._b == 0:
                return other
            raise ValueError(f"mixed fields sqrt({self._d}) and sqrt({other._d})")
        if isinstance(other, (int, Fraction)):
            return Scalar(other, 0, self._d)
        return None

    def _field(self, other: Scalar) -> int:
        return self._d if self._d != 1 else other._d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self._a + o._a, self._b + o._b, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self._a, -self._b, self._d)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self._a - o._a, self._b - o._b, self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._field(o)
        return Scalar(
            self._a * o._a + self._b * o._b * d,
            self._a * o._b + self._b * o._a,
            d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._d

    def inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1, 0, self._d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self._a * self._a - self._b * self._b * self._d
        return sa if diff > 0 else sb

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            if self._b == 0 and other._b == 0:
                return self._a == other._a
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __repr__(self) -> str:
        if self._d == 1:
            return f"Scalar({self._a})"
        return f"Scalar({self._a}, {self._b}, d={self._d})"

    def __str__(self) -> str:
        return format_scalar(self)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar | Rational) -> str:
    """Text form used by the algebra file format: ``p/q`` or ``p/q+r/s*sqrt``."""
    if not isinstance(x, Scalar):
        return _frac_str(Fraction(x))
    if x.b == 0:
        return _frac_str(x.a)
    irr = _frac_str(abs(x.b)) + "*sqrt"
    if x.a == 0:
        return ("-" if x.b < 0 else "") + irr
    return _frac_str(x.a) + ("-" if x.b < 0 else "+") + irr


_NUM = r"[+-]?\d+(?:/\d+)?"
_COEF_RE = re.compile(
    rf"^(?:(?P<a>{_NUM})(?:(?P<bsign>[+-])(?P<b>\d+(?:/\d+)?)\*sqrt)?"
    rf"|(?P<bonly>{_NUM})\*sqrt|(?P<neg>-)?sqrt)$"
)


def parse_scalar(text: str, d: int = 1) -> Scalar:
    """Parse ``p/q``, ``p/q+r/s*sqrt``, ``r/s*sqrt`` or ``sqrt`` over Q(sqrt d)."""
    m = _COEF_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed coefficient {text!r}")
    if m.group("a") is not None:
        a = Fraction(m.group("a"))
        b = Fraction(0)
        if m.group("b") is not None:
            b = Fraction(m.group("b"))
            if m.group("bsign") == "-":
                b = -b
    elif m.group("bonly") is not None:
        a, b = Fraction(0), Fraction(m.group("bonly"))
    else:
        a, b = Fraction(0), Fraction(-1 if m.group("neg") else 1)
    if b != 0 and d == 1:
        raise ValueError(f"coefficient {text!r} uses sqrt but the field is Q")
    return Scalar(a, b, d)


def as_scalar(x, d: int = 1) -> Scalar:
    if isinstance(x, Scalar):
        return x if x.d == d or x.b != 0 else Scalar(x.a, 0, d)
    return Scalar(Fraction(x), 0, d)

