"""Sparse multivariate polynomials over Q(sqrt2, sqrt3).

Internal layout
---------------
A monomial in ``n`` variables is packed into one Python int: exponent of
``x_i`` (1-based) lives in bit field ``i-1`` and the total degree in field
``n``.  Each field is ``FIELD_BITS`` wide with its top bit reserved as a guard,
so monomial multiplication is integer addition and divisibility is one
subtraction.  Packing ``x_n`` above ``x_1`` makes plain integer comparison of
the low part a lex order starting from ``x_n``; flipping those bits yields
graded reverse lexicographic order with ``x1 > x2 > ... > xn``.

Coefficients are stored scaled to integers over one common positive
denominator per polynomial.  A polynomial whose coefficients are all rational
stores plain ints; otherwise every coefficient is a 4-tuple of ints on the
basis {1, sqrt2, sqrt3, sqrt6}.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .coefficient import Coefficient

FIELD_BITS = 16
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1
MAX_VARS = 64
_FIELD_MASK = (1 << FIELD_BITS) - 1


class DimensionError(ValueError):
    """Operands live in different ambient spaces, or an index is out of range."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide` with the first leading term that cannot be cancelled."""

    def __init__(self, exponents: tuple[int, ...], coefficient: Coefficient):
        self.exponents = exponents
        self.coefficient = coefficient
        super().__init__(f"not divisible; irreducible leading term {coefficient} * {_mono_text(exponents)}")

    @property
    def witness(self) -> tuple[tuple[int, ...], Coefficient]:
        return (self.exponents, self.coefficient)


class NotSquare(ArithmeticError):
    """Raised by :func:`poly_sqrt` when the argument is not a perfect square."""


# ---------------------------------------------------------------------------
# packed monomials


class _Layout:
    """Bit masks for one ambient dimension (cached per n)."""

    __slots__ = ("n", "low_mask", "guard", "deg_unit", "units")

    def __init__(self, n: int):
        self.n = n
        self.low_mask = (1 << (FIELD_BITS * n)) - 1
        top = 1 << (FIELD_BITS - 1)
        self.guard = sum(top << (FIELD_BITS * i) for i in range(n + 1))
        self.deg_unit = 1 << (FIELD_BITS * n)
        self.units = [(1 << (FIELD_BITS * i)) + self.deg_unit for i in range(n)]

    def pack(self, exps: Sequence[int]) -> int:
        m = 0
        total = 0
        for i, e in enumerate(exps):
            if e < 0:
                raise ValueError("negative exponent")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
            m |= e << (FIELD_BITS * i)
            total += e
        if total > MAX_EXPONENT:
            raise OverflowError(f"total degree {total} exceeds {MAX_EXPONENT}")
        return m | (total << (FIELD_BITS * self.n))

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (FIELD_BITS * i)) & _FIELD_MASK for i in range(self.n))

    def degree(self, m: int) -> int:
        return m >> (FIELD_BITS * self.n)

    def exponent(self, m: int, i: int) -> int:
        return (m >> (FIELD_BITS * i)) & _FIELD_MASK

    def key(self, m: int) -> int:
        """Sort key realising grevlex; larger key = larger monomial."""
        return m ^ self.low_mask

    def divides(self, a: int, b: int) -> bool:
        """True when monomial ``a`` divides monomial ``b``."""
        g = self.guard
        return ((b | g) - a) & g == g


_LAYOUTS: dict[int, _Layout] = {}


def _layout(n: int) -> _Layout:
    lay = _LAYOUTS.get(n)
    if lay is None:
        if not 0 <= n <= MAX_VARS:
            raise DimensionError(f"ambient dimension must be in 0..{MAX_VARS}, got {n}")
        lay = _LAYOUTS[n] = _Layout(n)
    return lay


def _mono_text(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# integer coefficient helpers


def _kmul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (
        a * e + 2 * b * f + 3 * c * g + 6 * d * h,
        a * f + b * e + 3 * (c * h + d * g),
        a * g + c * e + 2 * (b * h + d * f),
        a * h + d * e + b * g + c * f,
    )


def _lift(terms: Mapping[int, int]) -> dict:
    return {m: (c, 0, 0, 0) for m, c in terms.items()}


def _coeff_to_ints(c: Coefficient) -> tuple[tuple[int, int, int, int], int]:
    den = 1
    for p in c.parts:
        den = den * p.denominator // gcd(den, p.denominator)
    return tuple(int(p * den) for p in c.parts), den


class Polynomial:
    """Immutable sparse polynomial in ``x1..xn`` with Q(sqrt2, sqrt3) coefficients."""

    __slots__ = ("nvars", "_terms", "_den", "_radical", "_lead")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], object]] = None):
        lay = _layout(nvars)
        acc: dict[tuple[int, ...], Coefficient] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionError(f"monomial {exps} has length {len(exps)}, expected {nvars}")
            c = Coefficient.coerce(c)
            acc[exps] = acc.get(exps, Coefficient(0)) + c
        den = 1
        for c in acc.values():
            for p in c.parts:
                den = den * p.denominator // gcd(den, p.denominator)
        radical = any(not c.is_rational() for c in acc.values())
        packed = {}
        for exps, c in acc.items():
            if radical:
                packed[lay.pack(exps)] = tuple(int(p * den) for p in c.parts)
            else:
                packed[lay.pack(exps)] = int(c.a * den)
        _init(self, nvars, packed, den, radical)

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, nvars: int, terms: dict, den: int, radical: bool) -> "Polynomial":
        """Build from packed terms, normalising in place (takes ownership of ``terms``)."""
        self = object.__new__(cls)
        _init(self, nvars, terms, den, radical)
        return self

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {}, 1, False)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The coordinate ``x_index`` (1-based)."""
        if not 1 <= index <= nvars:
            raise DimensionError(f"variable x{index} out of range for n={nvars}")
        lay = _layout(nvars)
        return cls._raw(nvars, {lay.units[index - 1]: 1}, 1, False)

    @classmethod
    def variables(cls, nvars: int) -> list["Polynomial"]:
        return [cls.variable(nvars, i) for i in range(1, nvars + 1)]

    @classmethod
    def monomial(cls, exps: Sequence[int], coefficient=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coefficient})

    @classmethod
    def sum(cls, polys: Iterable["Polynomial"], nvars: Optional[int] = None) -> "Polynomial":
        """Sum many polynomials with one normalisation pass."""
        polys = list(polys)
        if not polys:
            if nvars is None:
                raise ValueError("empty sum needs nvars")
            return cls.zero(nvars)
        n = polys[0].nvars if nvars is None else nvars
        for p in polys:
            if p.nvars != n:
                raise DimensionError(f"dimension mismatch: {p.nvars} vs {n}")
        den = 1
        for p in polys:
            den = den * p._den // gcd(den, p._den)
        radical = any(p._radical for p in polys)
        acc: dict = {}
        get = acc.get
        for p in polys:
            s = den // p._den
            if radical and not p._radical:
                for m, c in p._terms.items():
                    old = get(m)
                    c = c * s
                    acc[m] = (c, 0, 0, 0) if old is None else (old[0] + c, old[1], old[2], old[3])
            elif radical:
                for m, (a, b, c, d) in p._terms.items():
                    old = get(m)
                    if old is None:
                        acc[m] = (a * s, b * s, c * s, d * s)
                    else:
                        acc[m] = (old[0] + a * s, old[1] + b * s, old[2] + c * s, old[3] + d * s)
            elif s == 1:
                for m, c in p._terms.items():
                    acc[m] = get(m, 0) + c
            else:
                for m, c in p._terms.items():
                    acc[m] = get(m, 0) + c * s
        return cls._raw(n, acc, den, radical)

    # -- inspection --------------------------------------------------------

    @property
    def is_radical(self) -> bool:
        """True when some coefficient has an irrational part."""
        return self._radical

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coeff(self, c) -> Coefficient:
        den = self._den
        if self._radical:
            return Coefficient(*(Fraction(v, den) for v in c))
        return Coefficient(Fraction(c, den))

    def _sorted_keys(self) -> list[int]:
        lay = _layout(self.nvars)
        return sorted(self._terms, key=lay.key, reverse=True)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Coefficient]]:
        """Yield ``(exponents, coefficient)`` in grevlex-descending order."""
        lay = _layout(self.nvars)
        for m in self._sorted_keys():
            yield lay.unpack(m), self._coeff(self._terms[m])

    def as_dict(self) -> dict[tuple[int, ...], Coefficient]:
        return dict(self.terms())

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        lay = _layout(self.nvars)
        c = self._terms.get(lay.pack(exps))
        return Coefficient(0) if c is None else self._coeff(c)

    def constant_term(self) -> Coefficient:
        return self.coefficient((0,) * self.nvars)

    def leading_term(self) -> tuple[tuple[int, ...], Coefficient]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = self._lead_packed()
        return _layout(self.nvars).unpack(m), self._coeff(self._terms[m])

    def _lead_packed(self) -> int:
        if self._lead is None:
            lay = _layout(self.nvars)
            object.__setattr__(self, "_lead", max(self._terms, key=lay.key))
        return self._lead

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        lay = _layout(self.nvars)
        return max(lay.degree(m) for m in self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            return -1
        lay = _layout(self.nvars)
        return min(lay.degree(m) for m in self._terms)

    def degree_in(self, index: int) -> int:
        """Highest power of ``x_index`` (1-based) occurring."""
        self._check_index(index)
        lay = _layout(self.nvars)
        return max((lay.exponent(m, index - 1) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        lay = _layout(self.nvars)
        return len({lay.degree(m) for m in self._terms}) <= 1

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def is_rational(self) -> bool:
        return not self._radical

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.nvars:
            raise DimensionError(f"variable index {index} out of range 1..{self.nvars}")

    def _check_same(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"dimension mismatch: {self.nvars} vs {other.nvars}")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check_same(other)
            return other
        if isinstance(other, (int, Rational, Coefficient)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.sum((self, o))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        if self._radical:
            t = {m: (-a, -b, -c, -d) for m, (a, b, c, d) in self._terms.items()}
        else:
            t = {m: -c for m, c in self._terms.items()}
        return Polynomial._raw(self.nvars, t, self._den, self._radical)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.sum((self, -o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial.sum((o, -self))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_same(other)
            return _mul(self, other)
        if isinstance(other, (int, Rational, Coefficient)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, Coefficient)):
            return self.scale(1 / Coefficient.coerce(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, factor) -> "Polynomial":
        factor = Coefficient.coerce(factor)
        if factor.is_zero():
            return Polynomial.zero(self.nvars)
        if factor.is_rational():
            num, den = factor.a.numerator, factor.a.denominator
            if self._radical:
                t = {m: (a * num, b * num, c * num, d * num) for m, (a, b, c, d) in self._terms.items()}
            else:
                t = {m: c * num for m, c in self._terms.items()}
            return Polynomial._raw(self.nvars, t, self._den * den, self._radical)
        ints, den = _coeff_to_ints(factor)
        src = self._terms if self._radical else _lift(self._terms)
        t = {m: _kmul(c, ints) for m, c in src.items()}
        return Polynomial._raw(self.nvars, t, self._den * den, True)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return (
                self.nvars == other.nvars
                and self._den == other._den
                and self._radical == other._radical
                and self._terms == other._terms
            )
        if isinstance(other, (int, Rational, Coefficient)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, self._den, frozenset(self._terms.items())))

    # -- calculus and substitution -----------------------------------------

    def derivative(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to ``x_index`` (1-based)."""
        self._check_index(index)
        lay = _layout(self.nvars)
        shift = FIELD_BITS * (index - 1)
        unit = lay.units[index - 1]
        out = {}
        if self._radical:
            for m, (a, b, c, d) in self._terms.items():
                e = (m >> shift) & _FIELD_MASK
                if e:
                    out[m - unit] = (a * e, b * e, c * e, d * e)
        else:
            for m, c in self._terms.items():
                e = (m >> shift) & _FIELD_MASK
                if e:
                    out[m - unit] = c * e
        return Polynomial._raw(self.nvars, out, self._den, self._radical)

    def coefficient_in(self, index: int, power: int) -> "Polynomial":
        """Coefficient of ``x_index**power`` viewing self as a polynomial in ``x_index``."""
        self._check_index(index)
        lay = _layout(self.nvars)
        shift = FIELD_BITS * (index - 1)
        drop = power * lay.units[index - 1]
        out = {m - drop: c for m, c in self._terms.items() if (m >> shift) & _FIELD_MASK == power}
        return Polynomial._raw(self.nvars, out, self._den, self._radical)

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Return ``f(M x)``: each ``x_i`` becomes ``sum_j M[i][j] x_j``."""
        return substitute_linear(self, matrix)

    def evaluate(self, point: Sequence) -> Coefficient:
        return evaluate(self, point)

    def __call__(self, *point) -> Coefficient:
        return evaluate(self, point)

    def embed(self, nvars: int, positions: Optional[Sequence[int]] = None) -> "Polynomial":
        """Re-express in ``nvars`` variables; variable i goes to ``positions[i-1]`` (1-based)."""
        if positions is None:
            positions = list(range(1, self.nvars + 1))
        if len(positions) != self.nvars:
            raise DimensionError("positions must list one target per variable")
        src = _layout(self.nvars)
        dst = _layout(nvars)
        out = {}
        for m, c in self._terms.items():
            exps = [0] * nvars
            for i, e in enumerate(src.unpack(m)):
                if e:
                    exps[positions[i] - 1] += e
            out[dst.pack(exps)] = c
        if len(out) != len(self._terms):
            raise DimensionError("positions must be distinct")
        return Polynomial._raw(nvars, out, self._den, self._radical)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        from .grammar import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {str(self)!r})"


def _init(self: Polynomial, nvars: int, terms: dict, den: int, radical: bool) -> None:
    """Normalise packed terms in place and populate the slots."""
    if radical:
        for m in [m for m, c in terms.items() if not (c[0] or c[1] or c[2] or c[3])]:
            del terms[m]
        if all(not (c[1] or c[2] or c[3]) for c in terms.values()):
            terms = {m: c[0] for m, c in terms.items()}
            radical = False
    else:
        for m in [m for m, c in terms.items() if not c]:
            del terms[m]
    if not terms:
        den = 1
    else:
        g = den
        if radical:
            for c in terms.values():
                g = gcd(g, *c)
                if g == 1:
                    break
        else:
            for c in terms.values():
                g = gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            den //= g
            if radical:
                terms = {m: (a // g, b // g, c // g, d // g) for m, (a, b, c, d) in terms.items()}
            else:
                terms = {m: c // g for m, c in terms.items()}
    object.__setattr__(self, "nvars", nvars)
    object.__setattr__(self, "_terms", terms)
    object.__setattr__(self, "_den", den)
    object.__setattr__(self, "_radical", radical)
    object.__setattr__(self, "_lead", None)


def _mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f._terms or not g._terms:
        return Polynomial.zero(f.nvars)
    if f.degree() + g.degree() > MAX_EXPONENT:
        raise OverflowError("product degree exceeds exponent range")
    acc: dict = {}
    get = acc.get
    if not f._radical and not g._radical:
        gt = list(g._terms.items())
        for m1, c1 in f._terms.items():
            for m2, c2 in gt:
                k = m1 + m2
                acc[k] = get(k, 0) + c1 * c2
        return Polynomial._raw(f.nvars, acc, f._den * g._den, False)
    ft = f._terms if f._radical else _lift(f._terms)
    gt = list((g._terms if g._radical else _lift(g._terms)).items())
    for m1, (a, b, c, d) in ft.items():
        for m2, (e, ff, gg, h) in gt:
            k = m1 + m2
            p0 = a * e + 2 * b * ff + 3 * c * gg + 6 * d * h
            p1 = a * ff + b * e + 3 * (c * h + d * gg)
            p2 = a * gg + c * e + 2 * (b * h + d * ff)
            p3 = a * h + d * e + b * gg + c * ff
            old = get(k)
            if old is None:
                acc[k] = (p0, p1, p2, p3)
            else:
                acc[k] = (old[0] + p0, old[1] + p1, old[2] + p2, old[3] + p3)
    return Polynomial._raw(f.nvars, acc, f._den * g._den, True)


# ---------------------------------------------------------------------------
# module-level operations


def arithmetic(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Dispatch ``op`` in {"add", "sub", "mul"}."""
    f._check_same(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def partial_derivative(f: Polynomial, index: int) -> Polynomial:
    return f.derivative(index)


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """Return ``q`` with ``g == q * f`` or raise :class:`NotDivisible`.

    Single-divisor reduction in grevlex order.  Because the leading monomial
    of a product is the product of leading monomials, the first remainder
    term whose monomial is not a multiple of ``lead(f)`` proves ``f`` does not
    divide ``g``.
    """
    g._check_same(f)
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = f.nvars
    if g.is_zero():
        return Polynomial.zero(n)
    lay = _layout(n)

    inv_lead = None
    divisor = f
    if f._radical:
        _, lc = f.leading_term()
        if not lc.is_rational():
            inv_lead = lc.inverse()
            divisor = f.scale(inv_lead)
    radical = g._radical or divisor._radical
    lm = divisor._lead_packed()
    if radical:
        fterms = list((divisor._terms if divisor._radical else _lift(divisor._terms)).items())
        lc_int = dict(fterms)[lm][0]
        rem = dict(g._terms) if g._radical else _lift(g._terms)
    else:
        fterms = list(divisor._terms.items())
        lc_int = divisor._terms[lm]
        rem = dict(g._terms)

    # invariant: g = (rem + quot * divisor_int) / scale, with divisor_int = divisor * divisor._den
    scale = g._den
    quot: dict = {}
    key = lay.key
    heap = [-key(m) for m in rem]
    heapq.heapify(heap)
    low_mask = lay.low_mask
    while rem:
        while True:
            m = -heapq.heappop(heap) ^ low_mask
            if m in rem:
                break
        r = rem[m]
        if not lay.divides(lm, m):
            exps = lay.unpack(m)
            if radical:
                coeff = Coefficient(*(Fraction(v, scale) for v in r))
            else:
                coeff = Coefficient(Fraction(r, scale))
            raise NotDivisible(exps, coeff)
        if radical:
            cont = gcd(*r)
            s = abs(lc_int) // gcd(cont, lc_int)
            if s != 1:
                rem = {k: (a * s, b * s, c * s, d * s) for k, (a, b, c, d) in rem.items()}
                quot = {k: (a * s, b * s, c * s, d * s) for k, (a, b, c, d) in quot.items()}
                scale *= s
                r = rem[m]
            t = tuple(v // lc_int for v in r)
        else:
            s = abs(lc_int) // gcd(r, lc_int)
            if s != 1:
                rem = {k: c * s for k, c in rem.items()}
                quot = {k: c * s for k, c in quot.items()}
                scale *= s
                r = rem[m]
            t = r // lc_int
        shift = m - lm
        quot[shift] = t
        get = rem.get
        if radical:
            for mf, cf in fterms:
                k = mf + shift
                p = _kmul(t, cf)
                old = get(k)
                if old is None:
                    rem[k] = (-p[0], -p[1], -p[2], -p[3])
                    heapq.heappush(heap, -key(k))
                else:
                    v = (old[0] - p[0], old[1] - p[1], old[2] - p[2], old[3] - p[3])
                    if v[0] or v[1] or v[2] or v[3]:
                        rem[k] = v
                    else:
                        del rem[k]
        else:
            for mf, cf in fterms:
                k = mf + shift
                old = get(k)
                if old is None:
                    rem[k] = -t * cf
                    heapq.heappush(heap, -key(k))
                else:
                    v = old - t * cf
                    if v:
                        rem[k] = v
                    else:
                        del rem[k]
    # g = quot * divisor._den * divisor / scale
    q = Polynomial._raw(n, quot, scale, radical).scale(divisor._den)
    if inv_lead is not None:
        q = q.scale(inv_lead)
    return q


def substitute_linear(f: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    """``(f o M)(x) := f(M x)``."""
    n = f.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionError(f"substitution matrix must be {n}x{n}")
    xs = Polynomial.variables(n)
    forms = []
    for row in matrix:
        forms.append(Polynomial.sum([x.scale(c) for x, c in zip(xs, row) if c], nvars=n))
    powers: list[dict[int, Polynomial]] = [{} for _ in range(n)]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        p = cache.get(e)
        if p is None:
            p = forms[i] if e == 1 else power(i, e - 1) * forms[i]
            cache[e] = p
        return p

    one = Polynomial.constant(n, 1)
    pieces = []
    for exps, coeff in f.terms():
        term = one
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        pieces.append(term.scale(coeff))
    return Polynomial.sum(pieces, nvars=n)


def evaluate(f: Polynomial, point: Sequence) -> Coefficient:
    n = f.nvars
    if len(point) != n:
        raise DimensionError(f"point has length {len(point)}, expected {n}")
    lay = _layout(n)
    pts = [Coefficient.coerce(p) for p in point]
    if not f._radical and all(p.is_rational() for p in pts):
        vals = [p.a for p in pts]
        total = Fraction(0)
        for m, c in f._terms.items():
            v = Fraction(c)
            for i, e in enumerate(lay.unpack(m)):
                if e:
                    v *= vals[i] ** e
            total += v
        return Coefficient(total / f._den)
    total = Coefficient(0)
    for m, c in f._terms.items():
        v = f._coeff(c)
        for i, e in enumerate(lay.unpack(m)):
            if e:
                v = v * pts[i] ** e
        total = total + v
    return total


def poly_sqrt(f: Polynomial) -> Polynomial:
    """Square root with positive leading coefficient, or raise :class:`NotSquare`."""
    if f.is_zero():
        raise ValueError("poly_sqrt of the zero polynomial")
    n = f.nvars
    lay = _layout(n)
    lead_exps, lead_c = f.leading_term()
    if any(e % 2 for e in lead_exps):
        raise NotSquare(f"leading monomial {_mono_text(lead_exps)} has an odd exponent")
    root_c = lead_c.sqrt()
    if root_c is None:
        raise NotSquare(f"leading coefficient {lead_c} is not a square in Q(sqrt2, sqrt3)")
    g_lead = Polynomial.monomial([e // 2 for e in lead_exps], root_c)
    g_lead_m = lay.pack([e // 2 for e in lead_exps])
    twice_lead = root_c * 2
    g = g_lead
    rem = f - g * g
    last_key = lay.key(g_lead_m)
    floor = f.min_degree()
    while not rem.is_zero():
        r_exps, r_c = rem.leading_term()
        r_m = lay.pack(r_exps)
        if not lay.divides(g_lead_m, r_m):
            raise NotSquare(f"remainder term {_mono_text(r_exps)} is not reachable")
        t_m = r_m - g_lead_m
        if lay.key(t_m) >= last_key or 2 * lay.degree(t_m) < floor:
            raise NotSquare("square-root recursion did not terminate in a perfect square")
        t = Polynomial.monomial(lay.unpack(t_m), r_c / twice_lead)
        rem = rem - t * (g * 2 + t)
        g = g + t
        last_key = lay.key(t_m)
    return g
