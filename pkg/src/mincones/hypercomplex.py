"""Cayley-Dickson algebras R, C, H, O with polynomial components.

Doubling convention: ``(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`` and
``conj(a, b) = (conj(a), -b)``.  The recursive helpers only need ``+``, ``-``,
``*`` and unary minus on components, so they work for ints as well as
:class:`~mincones.polynomial.Polynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polynomial import DimensionError, Polynomial

ALGEBRA_DIMS = (1, 2, 4, 8)


def _conj(x: Sequence) -> list:
    return [x[0]] + [-c for c in x[1:]]


def _add(x: Sequence, y: Sequence) -> list:
    return [a + b for a, b in zip(x, y)]


def _sub(x: Sequence, y: Sequence) -> list:
    return [a - b for a, b in zip(x, y)]


def cd_product(x: Sequence, y: Sequence) -> list:
    """Cayley-Dickson product of two component sequences of equal power-of-two length."""
    if len(x) != len(y):
        raise DimensionError(f"algebra dimensions differ: {len(x)} vs {len(y)}")
    if len(x) == 1:
        return [x[0] * y[0]]
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    return _sub(cd_product(a, c), cd_product(_conj(d), b)) + _add(cd_product(d, a), cd_product(b, _conj(c)))


def basis_unit(d: int, k: int) -> list[int]:
    """Integer components of the k-th basis element e_k (e_0 = 1)."""
    v = [0] * d
    v[k] = 1
    return v


def left_multiplication(d: int, k: int) -> list[list[int]]:
    """Integer matrix of ``x -> e_k x``; column j holds the components of e_k e_j."""
    cols = [cd_product(basis_unit(d, k), basis_unit(d, j)) for j in range(d)]
    return [[cols[j][i] for j in range(d)] for i in range(d)]


@dataclass(frozen=True)
class CDElement:
    """Element of the d-dimensional Cayley-Dickson algebra with polynomial components."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        d = len(self.components)
        if d not in ALGEBRA_DIMS:
            raise DimensionError(f"algebra dimension must be one of {ALGEBRA_DIMS}, got {d}")
        n = self.components[0].nvars
        if any(c.nvars != n for c in self.components):
            raise DimensionError("components must share an ambient dimension")

    @classmethod
    def from_variables(cls, nvars: int, first: int, d: int) -> "CDElement":
        """The element whose components are ``x_first, ..., x_{first+d-1}``."""
        return cls(tuple(Polynomial.variable(nvars, first + i) for i in range(d)))

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def nvars(self) -> int:
        return self.components[0].nvars

    def __mul__(self, other: "CDElement") -> "CDElement":
        return cd_multiply(self, other)

    def __add__(self, other: "CDElement") -> "CDElement":
        _check_pair(self, other)
        return CDElement(tuple(_add(self.components, other.components)))

    def __sub__(self, other: "CDElement") -> "CDElement":
        _check_pair(self, other)
        return CDElement(tuple(_sub(self.components, other.components)))

    def conjugate(self) -> "CDElement":
        return cd_conjugate(self)


def _check_pair(x: CDElement, y: CDElement) -> None:
    if x.d != y.d:
        raise DimensionError(f"algebra dimensions differ: {x.d} vs {y.d}")
    if x.nvars != y.nvars:
        raise DimensionError("components live in different ambient spaces")


def cd_multiply(x: CDElement, y: CDElement) -> CDElement:
    _check_pair(x, y)
    return CDElement(tuple(cd_product(x.components, y.components)))


def cd_conjugate(x: CDElement) -> CDElement:
    return CDElement(tuple(_conj(x.components)))


def cd_real(x: CDElement) -> Polynomial:
    return x.components[0]


def cd_norm(x: CDElement) -> Polynomial:
    """Sum of squared components (equals the real part of x * conj(x))."""
    return Polynomial.sum([c * c for c in x.components])
