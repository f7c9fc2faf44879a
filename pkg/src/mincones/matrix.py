"""Exact square and rectangular matrices over Q(sqrt2, sqrt3), stored row-sparse."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .coefficient import Coefficient


class Matrix:
    """Immutable matrix; each row is a dict ``column -> nonzero Coefficient``."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self._rows = tuple(
            {j: c for j, c in ((j, Coefficient.coerce(v)) for j, v in enumerate(r)) if c} for r in rows
        )

    @classmethod
    def _from_sparse(cls, nrows: int, ncols: int, rows: Iterable[dict]) -> "Matrix":
        self = object.__new__(cls)
        self.nrows = nrows
        self.ncols = ncols
        self._rows = tuple(rows)
        return self

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one = Coefficient(1)
        return cls._from_sparse(n, n, ({i: one} for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls._from_sparse(nrows, ncols, ({} for _ in range(nrows)))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble from a grid of blocks (rows of equal height, columns of equal width)."""
        heights = [row[0].nrows for row in blocks]
        widths = [b.ncols for b in blocks[0]]
        out = []
        for bi, brow in enumerate(blocks):
            for r in range(heights[bi]):
                merged = {}
                offset = 0
                for bj, b in enumerate(brow):
                    if b.nrows != heights[bi] or b.ncols != widths[bj]:
                        raise ValueError("block sizes do not line up")
                    for j, c in b._rows[r].items():
                        merged[offset + j] = c
                    offset += widths[bj]
                out.append(merged)
        return cls._from_sparse(sum(heights), sum(widths), out)

    @classmethod
    def block_diag(cls, mats: Sequence["Matrix"]) -> "Matrix":
        out = []
        offset = 0
        for mat in mats:
            for row in mat._rows:
                out.append({offset + j: c for j, c in row.items()})
            offset += mat.ncols
        return cls._from_sparse(len(out), offset, out)

    # -- access --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Coefficient:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return self._rows[i].get(j, Coefficient(0))

    def row_items(self, i: int) -> Iterable[tuple[int, Coefficient]]:
        return self._rows[i].items()

    def rows(self) -> list[list[Coefficient]]:
        zero = Coefficient(0)
        return [[r.get(j, zero) for j in range(self.ncols)] for r in self._rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        out = []
        for r1, r2 in zip(self._rows, other._rows):
            row = dict(r1)
            for j, c in r2.items():
                v = row.get(j)
                v = c if v is None else v + c
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
            out.append(row)
        return Matrix._from_sparse(self.nrows, self.ncols, out)

    def __neg__(self) -> "Matrix":
        return Matrix._from_sparse(self.nrows, self.ncols, ({j: -c for j, c in r.items()} for r in self._rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, k) -> "Matrix":
        k = Coefficient.coerce(k)
        if not k:
            return Matrix.zeros(self.nrows, self.ncols)
        return Matrix._from_sparse(self.nrows, self.ncols, ({j: c * k for j, c in r.items()} for r in self._rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        orows = other._rows
        for r in self._rows:
            acc: dict[int, Coefficient] = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    v = acc.get(j)
                    acc[j] = a * b if v is None else v + a * b
            out.append({j: c for j, c in acc.items() if c})
        return Matrix._from_sparse(self.nrows, other.ncols, out)

    @property
    def T(self) -> "Matrix":
        out: list[dict] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, c in r.items():
                out[j][i] = c
        return Matrix._from_sparse(self.ncols, self.nrows, out)

    def trace(self) -> Coefficient:
        total = Coefficient(0)
        for i, r in enumerate(self._rows):
            c = r.get(i)
            if c is not None:
                total = total + c
        return total

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product ``self (x) other``."""
        out = []
        for r1 in self._rows:
            for r2 in other._rows:
                out.append({j1 * other.ncols + j2: a * b for j1, a in r1.items() for j2, b in r2.items()})
        return Matrix._from_sparse(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse over the field; raises ``ZeroDivisionError`` if singular."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = self.rows()
        inv = Matrix.identity(n).rows()
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            p = a[col][col].inverse()
            a[col] = [x * p for x in a[col]]
            inv[col] = [x * p for x in inv[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return Matrix(inv)

    # -- predicates ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, tuple(frozenset(r.items()) for r in self._rows)))

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_orthogonal(self) -> bool:
        return self.is_square() and self.T @ self == Matrix.identity(self.nrows)

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.nrows)

    def is_zero(self) -> bool:
        return not any(self._rows)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(", ".join(c.literal() for c in row) for row in self.rows())
        return f"Matrix([{body}])"


def cayley_transform(skew: Matrix) -> Matrix:
    """``(I - S)(I + S)^-1``; orthogonal whenever ``S`` is skew-symmetric."""
    n = skew.nrows
    eye = Matrix.identity(n)
    return (eye - skew) @ (eye + skew).inverse()


def rational_orthogonal(seed: int, dim: int, max_entry: int = 3) -> Matrix:
    """Deterministic exactly-orthogonal rational matrix from a seeded random skew matrix."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = random.Random(seed)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            v = Fraction(rng.randint(-max_entry, max_entry), rng.randint(1, max_entry))
            rows[i][j] = v
            rows[j][i] = -v
    return cayley_transform(Matrix(rows))


_PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def rational_rotation_product(seed: int, dim: int, count: int) -> Matrix:
    """Product of ``count`` seeded plane rotations with Pythagorean cosines (sparser than Cayley)."""
    rng = random.Random(seed)
    result = Matrix.identity(dim)
    if dim < 2:
        return result
    for _ in range(count):
        i, j = rng.sample(range(dim), 2)
        a, b, c = rng.choice(_PYTHAGOREAN)
        if rng.random() < 0.5:
            b = -b
        rows = Matrix.identity(dim).rows()
        rows[i][i] = Coefficient(Fraction(a, c))
        rows[j][j] = Coefficient(Fraction(a, c))
        rows[i][j] = Coefficient(Fraction(-b, c))
        rows[j][i] = Coefficient(Fraction(b, c))
        result = Matrix(rows) @ result
    return result
