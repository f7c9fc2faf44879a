"""Symmetric Clifford systems A_0..A_q on R^{2m} and Hurwitz-Radon families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .classify import delta
from .coefficient import Coefficient
from .grammar import parse_coefficient
from .hypercomplex import left_multiplication
from .matrix import Matrix, rational_orthogonal  # noqa: F401  (re-exported)

MAX_DIM = 1 << 10

CANONICAL = "canonical-irreducible"
DIRECT_SUM = "direct-sum"
CONJUGATED = "conjugated"


class ResourceGuard(ValueError):
    """Requested construction exceeds the matrix-size guard."""


@dataclass(frozen=True)
class HRFamily:
    """k anticommuting skew-symmetric orthogonal matrices with squares -I."""

    k: int
    dim: int
    matrices: tuple[Matrix, ...]


@dataclass(frozen=True)
class CliffordSystem:
    q: int
    m: int
    matrices: tuple[Matrix, ...]
    provenance: str = CANONICAL
    kplus: int = 1
    kminus: int = 0

    def __post_init__(self):
        if len(self.matrices) != self.q + 1:
            raise ValueError(f"need q+1 = {self.q + 1} matrices, got {len(self.matrices)}")
        if any(a.shape != (2 * self.m, 2 * self.m) for a in self.matrices):
            raise ValueError(f"matrices must be {2 * self.m}x{2 * self.m}")

    def serialize(self) -> str:
        lines = [f"clifford q={self.q} m={self.m}"]
        for a in self.matrices:
            lines += [", ".join(c.literal() for c in row) for row in a.rows()]
        return "\n".join(lines) + "\n"


def parse_system(text: str) -> CliffordSystem:
    """Inverse of :meth:`CliffordSystem.serialize` (blank lines ignored)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("clifford"):
        raise ValueError("missing 'clifford q=<q> m=<m>' header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    q, m = int(fields["q"]), int(fields["m"])
    size = 2 * m
    body = lines[1:]
    if len(body) != (q + 1) * size:
        raise ValueError(f"expected {(q + 1) * size} matrix rows, got {len(body)}")
    mats = []
    for i in range(q + 1):
        rows = [[parse_coefficient(tok) for tok in body[i * size + r].split(",")] for r in range(size)]
        mats.append(Matrix(rows))
    return CliffordSystem(q, m, tuple(mats), provenance=CONJUGATED)


def _int_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return Matrix(rows)


def _guard(dim: int) -> None:
    if dim > MAX_DIM:
        raise ResourceGuard(f"matrix dimension {dim} exceeds guard {MAX_DIM}")


def hr_family(k: int) -> HRFamily:
    """Canonical Hurwitz-Radon family of k generators on the minimal dimension delta(k+1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    _guard(delta(k + 1))
    if k == 0:
        return HRFamily(0, 1, ())
    if k == 1:
        mats = (_int_matrix(left_multiplication(2, 1)),)
        return HRFamily(1, 2, mats)
    if k <= 3:
        return HRFamily(k, 4, tuple(_int_matrix(left_multiplication(4, j)) for j in range(1, k + 1)))
    if k <= 7:
        return HRFamily(k, 8, tuple(_int_matrix(left_multiplication(8, j)) for j in range(1, k + 1)))
    if k == 8:
        octo = hr_family(7).matrices
        eye = Matrix.identity(8)
        zero = Matrix.zeros(8)
        doubled = [Matrix.block([[zero, lj], [lj, zero]]) for lj in octo]
        doubled.append(Matrix.block([[zero, eye], [-eye, zero]]))
        return HRFamily(8, 16, tuple(doubled))
    base = hr_family(8).matrices
    omega = base[0]
    for f in base[1:]:
        omega = omega @ f
    tail = hr_family(k - 8)
    eye_t = Matrix.identity(tail.dim)
    mats = [eye_t.kron(f) for f in base] + [e.kron(omega) for e in tail.matrices]
    return HRFamily(k, 16 * tail.dim, tuple(mats))


def irreducible_system(q: int) -> CliffordSystem:
    """A_0 = diag(I, -I), A_1 = [[0, I], [I, 0]], A_{1+i} = [[0, E_i], [-E_i, 0]]."""
    return direct_sum(q, 1, 0, provenance=CANONICAL)


def direct_sum(q: int, k_plus: int, k_minus: int, provenance: str = DIRECT_SUM) -> CliffordSystem:
    """Sum of k_plus irreducible copies and k_minus negated copies.

    Coordinates are interleaved so that every u-half comes before every
    v-half; A_0 and A_1 then keep the global normal form of the irreducible
    system whenever ``k_minus == 0``.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if k_plus < 0 or k_minus < 0 or k_plus + k_minus < 1:
        raise ValueError("need k_plus, k_minus >= 0 with k_plus + k_minus >= 1")
    d = delta(q)
    k = k_plus + k_minus
    _guard(2 * d * k)
    signs = [1] * k_plus + [-1] * k_minus
    fam = hr_family(q - 1)
    eye, es = Matrix.identity(fam.dim), fam.matrices

    def signed(mat: Matrix) -> Matrix:
        return Matrix.block_diag([mat if s > 0 else -mat for s in signs])

    big_eye = signed(eye)
    big_zero = Matrix.zeros(d * k)
    mats = [
        Matrix.block([[big_eye, big_zero], [big_zero, -big_eye]]),
        Matrix.block([[big_zero, big_eye], [big_eye, big_zero]]),
    ]
    for e in es:
        be = signed(e)
        mats.append(Matrix.block([[big_zero, be], [-be, big_zero]]))
    return CliffordSystem(q, d * k, tuple(mats), provenance, k_plus, k_minus)


@dataclass(frozen=True)
class SystemCheck:
    ok: bool
    relation: Optional[tuple[int, int]] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_system(system: CliffordSystem) -> SystemCheck:
    """Check symmetry, A_i A_j + A_j A_i = 2 delta_ij I and trace-freeness.

    The diagonal relation (i, i) covers symmetry, A_i^2 = I (hence
    orthogonality) and trace A_i = 0.
    """
    mats = system.matrices
    size = 2 * system.m
    eye = Matrix.identity(size)
    for i, a in enumerate(mats):
        if not a.is_symmetric():
            return SystemCheck(False, (i, i), f"A_{i} is not symmetric")
        if a @ a != eye:
            return SystemCheck(False, (i, i), f"A_{i}^2 != I")
        if a.trace():
            return SystemCheck(False, (i, i), f"trace A_{i} = {a.trace()} != 0")
        for j in range(i + 1, len(mats)):
            b = mats[j]
            if not (a @ b + b @ a).is_zero():
                return SystemCheck(False, (i, j), f"A_{i} A_{j} + A_{j} A_{i} != 0")
    return SystemCheck(True, None, "ok")


def omega_trace_abs(system: CliffordSystem) -> Optional[Coefficient]:
    """|trace(A_0 A_1 ... A_q)| for q = 0 mod 4, else None."""
    if system.q % 4:
        return None
    prod = system.matrices[0]
    for a in system.matrices[1:]:
        prod = prod @ a
    return abs(prod.trace())


def system_invariants(system: CliffordSystem) -> tuple[int, int, Optional[Coefficient]]:
    return (system.q, system.m, omega_trace_abs(system))


def conjugate_system(system: CliffordSystem, a: Matrix, d: Matrix) -> CliffordSystem:
    """B_j = a A_{row_j(d)} a^T, so that A_z = a^T B_{dz} a and Phi_B(ay, dz) = Phi_A(y, z)."""
    size = 2 * system.m
    if a.shape != (size, size) or not a.is_orthogonal():
        raise ValueError(f"a must be an orthogonal {size}x{size} matrix")
    if d.shape != (system.q + 1, system.q + 1) or not d.is_orthogonal():
        raise ValueError(f"d must be an orthogonal {system.q + 1}x{system.q + 1} matrix")
    at = a.T
    new = []
    for j in range(system.q + 1):
        combo = Matrix.zeros(size)
        for k, w in d.row_items(j):
            combo = combo + system.matrices[k].scale(w)
        new.append(a @ combo @ at)
    return CliffordSystem(system.q, system.m, tuple(new), CONJUGATED, system.kplus, system.kminus)
