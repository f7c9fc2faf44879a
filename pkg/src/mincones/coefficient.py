"""Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).

Elements are ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` with rational ``a, b, c, d``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Optional, Union

Scalar = Union[int, Fraction, "Coefficient"]

_RADICALS = ("", "s2", "s3", "s6")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class Coefficient:
    """Immutable element of Q(sqrt2, sqrt3) on the basis {1, sqrt2, sqrt3, sqrt6}."""

    __slots__ = ("a", "b", "c", "d")

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    def __setattr__(self, name, value):
        raise AttributeError("Coefficient is immutable")

    @classmethod
    def coerce(cls, x: Scalar) -> "Coefficient":
        if isinstance(x, Coefficient):
            return x
        return cls(x)

    @classmethod
    def sqrt2(cls) -> "Coefficient":
        return cls(0, 1)

    @classmethod
    def sqrt3(cls) -> "Coefficient":
        return cls(0, 0, 1)

    @classmethod
    def sqrt6(cls) -> "Coefficient":
        return cls(0, 0, 0, 1)

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Rational)):
                return Coefficient(self.a + other, self.b, self.c, self.d)
            return NotImplemented
        return Coefficient(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if not isinstance(other, (Coefficient, int, Rational)):
            return NotImplemented
        return self + (-Coefficient.coerce(other))

    def __rsub__(self, other):
        return Coefficient.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Rational)):
                return Coefficient(self.a * other, self.b * other, self.c * other, self.d * other)
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        if not (b or c or d):
            return Coefficient(a * e, a * f, a * g, a * h)
        if not (f or g or h):
            return Coefficient(a * e, b * e, c * e, d * e)
        return Coefficient(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conjugate(self, flip2: bool, flip3: bool) -> "Coefficient":
        """Apply the Galois automorphism sending sqrt2 -> -sqrt2 and/or sqrt3 -> -sqrt3."""
        sb = -1 if flip2 else 1
        sc = -1 if flip3 else 1
        return Coefficient(self.a, sb * self.b, sc * self.c, sb * sc * self.d)

    def norm(self) -> Fraction:
        """Field norm down to Q (product of the four conjugates)."""
        p = self * self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        assert p.is_rational()
        return p.a

    def inverse(self) -> "Coefficient":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        if self.is_rational():
            return Coefficient(1 / self.a)
        co = self.conjugate(True, False) * self.conjugate(False, True) * self.conjugate(True, True)
        n = (self * co).a
        return co * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, Coefficient):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return Coefficient.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Coefficient":
        if k < 0:
            return self.inverse() ** (-k)
        result = Coefficient(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Coefficient):
            return self.parts == other.parts
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.a)
        return hash(self.parts)

    def sign(self) -> int:
        """Sign of the real number obtained with the positive square roots."""
        alpha = (self.a, self.b)  # self = alpha + beta*sqrt3 over Q(sqrt2)
        beta = (self.c, self.d)
        return _sign_ext(alpha, beta, 3, _Q2Field)

    def __lt__(self, other) -> bool:
        return (self - Coefficient.coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Coefficient.coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Coefficient.coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Coefficient.coerce(other)).sign() >= 0

    def __abs__(self) -> "Coefficient":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2 ** 0.5 + float(self.c) * 3 ** 0.5 + float(self.d) * 6 ** 0.5

    # -- square roots ----------------------------------------------------

    def sqrt(self) -> Optional["Coefficient"]:
        """Non-negative square root inside the field, or ``None`` if there is none."""
        if self.is_zero():
            return self
        if self.sign() < 0:
            return None
        alpha = (self.a, self.b)
        beta = (self.c, self.d)
        root = _sqrt_ext(alpha, beta, 3, _Q2Field)
        if root is None:
            return None
        (a, b), (c, d) = root
        r = Coefficient(a, b, c, d)
        return -r if r.sign() < 0 else r

    # -- text ------------------------------------------------------------

    def literal(self) -> str:
        """Text form accepted by the polynomial grammar, e.g. ``1/2 + 3*s2``."""
        pieces = []
        for value, rad in zip(self.parts, _RADICALS):
            if not value:
                continue
            if rad:
                mag = abs(value)
                body = rad if mag == 1 else f"{mag}*{rad}"
            else:
                mag = abs(value)
                body = str(mag)
            pieces.append(("-" if value < 0 else "+", body))
        if not pieces:
            return "0"
        head_sign, head = pieces[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in pieces[1:]:
            out += f" {s} {body}"
        return out

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"Coefficient({self.literal()!r})"


# Square roots and signs in the tower Q -> Q(sqrt2) -> Q(sqrt2)(sqrt3).
# An element of Q(sqrt2) is a pair (p, r) meaning p + r*sqrt2.


def _sqrt_q(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign_q(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class _QField:
    """Arithmetic on Q elements used by the generic tower helpers."""

    zero = Fraction(0)

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def scale(x, k):
        return x * k

    @staticmethod
    def inv(x):
        return 1 / x

    @staticmethod
    def is_zero(x):
        return x == 0

    sqrt = staticmethod(_sqrt_q)
    sign = staticmethod(_sign_q)


class _Q2Field:
    """Arithmetic on Q(sqrt2) elements encoded as pairs."""

    zero = (Fraction(0), Fraction(0))

    @staticmethod
    def add(x, y):
        return (x[0] + y[0], x[1] + y[1])

    @staticmethod
    def sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    @staticmethod
    def mul(x, y):
        return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    @staticmethod
    def scale(x, k):
        return (x[0] * k, x[1] * k)

    @staticmethod
    def inv(x):
        n = x[0] * x[0] - 2 * x[1] * x[1]
        return (x[0] / n, -x[1] / n)

    @staticmethod
    def is_zero(x):
        return x[0] == 0 and x[1] == 0

    @staticmethod
    def sqrt(x):
        return _sqrt_ext(x[0], x[1], 2, _QField)

    @staticmethod
    def sign(x):
        return _sign_ext(x[0], x[1], 2, _QField)


def _sign_ext(alpha, beta, rad: int, base) -> int:
    """Sign of alpha + beta*sqrt(rad), given sign and arithmetic of the base field."""
    sa, sb = base.sign(alpha), base.sign(beta)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sa or sb
    # opposite signs: the larger of alpha^2 and rad*beta^2 wins
    diff = base.sign(base.sub(base.mul(alpha, alpha), base.scale(base.mul(beta, beta), rad)))
    return sa if diff > 0 else sb


def _sqrt_ext(alpha, beta, rad: int, base):
    """Square root of alpha + beta*sqrt(rad) as a pair (u, v) over ``base``, or None."""
    if base.is_zero(beta):
        r = base.sqrt(alpha)
        if r is not None:
            return (r, base.zero)
        # alpha = rad * v^2  ->  root v*sqrt(rad)
        r = base.sqrt(base.scale(alpha, Fraction(1, rad)))
        if r is not None:
            return (base.zero, r)
        return None
    disc = base.sub(base.mul(alpha, alpha), base.scale(base.mul(beta, beta), rad))
    n = base.sqrt(disc)
    if n is None:
        return None
    for candidate in (base.add(alpha, n), base.sub(alpha, n)):
        u = base.sqrt(base.scale(candidate, Fraction(1, 2)))
        if u is None or base.is_zero(u):
            continue
        v = base.mul(beta, base.inv(base.scale(u, 2)))
        return (u, v)
    return None


ZERO = Coefficient(0)
ONE = Coefficient(1)
