"""Constructors for the concrete cone families and the Clifford-cubic irreducibility certificate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .clifford import CONJUGATED, CliffordSystem, verify_system
from .coefficient import Coefficient
from .grammar import format_poly, parse_poly
from .hypercomplex import CDElement, cd_multiply, cd_norm, cd_real
from .polynomial import NotSquare, Polynomial, poly_sqrt

FAMILIES = ("clifford", "quadric", "determinant", "cartan", "hsiang", "reducible-example", "fkm-quartic")
MAX_DET_ORDER = 6


@dataclass(frozen=True)
class ConeSpec:
    family: str
    params: tuple[tuple[str, int], ...]
    n: int
    polynomial: Polynomial

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.polynomial.nvars != self.n:
            raise ValueError("polynomial dimension does not match n")

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def header(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params) or "-"
        return f"cone family={self.family} n={self.n} params={params}"

    def serialize(self) -> str:
        return f"{self.header()}\n{format_poly(self.polynomial)}\n"


def parse_cone(text: str) -> ConeSpec:
    """Read a serialized ConeSpec."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("cone "):
        raise ValueError("expected a 'cone ...' header line followed by one polynomial line")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    n = int(fields["n"])
    params: tuple[tuple[str, int], ...] = ()
    if fields.get("params", "-") != "-":
        params = tuple((k, int(v)) for k, v in (p.split("=") for p in fields["params"].split(",")))
    return ConeSpec(fields["family"], params, n, parse_poly(lines[1], n))


def _quadratic_form(matrix, y: Sequence[Polynomial]) -> Polynomial:
    """y^T A y with off-diagonal pairs folded together."""
    n = y[0].nvars
    pieces = []
    for i in range(matrix.nrows):
        for j, c in matrix.row_items(i):
            if j == i:
                pieces.append((y[i] * y[i]).scale(c))
            elif j > i:
                pieces.append((y[i] * y[j]).scale(c * 2))
    return Polynomial.sum(pieces, nvars=n)


def _require_valid(system: CliffordSystem) -> None:
    check = verify_system(system)
    if not check:
        raise ValueError(f"invalid Clifford system: {check.message}")


def _system_params(system: CliffordSystem) -> tuple[tuple[str, int], ...]:
    return (("q", system.q), ("m", system.m), ("kplus", system.kplus), ("kminus", system.kminus))


def clifford_cubic(system: CliffordSystem, check: bool = True) -> ConeSpec:
    """Phi(y, z) = sum_i z_i y^T A_i y with y = x1..x_{2m}, z = x_{2m+1}..x_{2m+q+1}."""
    if check:
        _require_valid(system)
    size = 2 * system.m
    n = size + system.q + 1
    xs = Polynomial.variables(n)
    y, z = xs[:size], xs[size:]
    poly = Polynomial.sum([z[i] * _quadratic_form(a, y) for i, a in enumerate(system.matrices)], nvars=n)
    return ConeSpec("clifford", _system_params(system), n, poly)


def quadric_cone(p: int, q: int) -> ConeSpec:
    """(q-1)(x_1^2+...+x_p^2) - (p-1)(x_{p+1}^2+...+x_{p+q}^2)."""
    if p < 2 or q < 2:
        raise ValueError("quadric_cone needs p, q >= 2")
    n = p + q
    xs = Polynomial.variables(n)
    poly = Polynomial.sum(
        [(x * x).scale(q - 1) for x in xs[:p]] + [(x * x).scale(-(p - 1)) for x in xs[p:]], nvars=n
    )
    return ConeSpec("quadric", (("p", p), ("q", q)), n, poly)


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz expansion of the determinant of a square matrix of polynomials."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    n = matrix[0][0].nvars
    pieces = []
    for perm in permutations(range(size)):
        term = matrix[0][perm[0]]
        for r in range(1, size):
            if term.is_zero():
                break
            term = term * matrix[r][perm[r]]
        if not term.is_zero():
            pieces.append(term if _parity(perm) == 0 else -term)
    return Polynomial.sum(pieces, nvars=n)


def _parity(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            parity ^= (length - 1) & 1
    return parity


def _det_check(m: int) -> None:
    if m < 2:
        raise ValueError("determinant cone needs m >= 2")
    if m > MAX_DET_ORDER:
        raise ValueError(f"determinant cone limited to m <= {MAX_DET_ORDER}")


def _variable_matrix(m: int) -> list[list[Polynomial]]:
    """x_{ij} -> x_{(i-1)m + j}."""
    xs = Polynomial.variables(m * m)
    return [[xs[i * m + j] for j in range(m)] for i in range(m)]


def determinant_cone(m: int) -> ConeSpec:
    _det_check(m)
    return ConeSpec("determinant", (("m", m),), m * m, determinant(_variable_matrix(m)))


def det_weight_formula(m: int) -> Polynomial:
    """-(1/2) * sum over i != k, j != l of (det of X with rows i,k and columns j,l removed)^2."""
    _det_check(m)
    x = _variable_matrix(m)
    n = m * m
    minors: dict[tuple[int, int, int, int], Polynomial] = {}
    pieces = []
    for i in range(m):
        for k in range(m):
            if i == k:
                continue
            for j in range(m):
                for l in range(m):
                    if j == l:
                        continue
                    key = (min(i, k), max(i, k), min(j, l), max(j, l))
                    sq = minors.get(key)
                    if sq is None:
                        rows = [r for r in range(m) if r not in (i, k)]
                        cols = [c for c in range(m) if c not in (j, l)]
                        if rows:
                            minor = determinant([[x[r][c] for c in cols] for r in rows])
                        else:
                            minor = Polynomial.constant(n, 1)
                        sq = minors[key] = minor * minor
                    pieces.append(sq)
    return Polynomial.sum(pieces, nvars=n).scale(Fraction(-1, 2))


def cartan_cubic(d: int) -> ConeSpec:
    """Isoparametric cubic over the d-dimensional division algebra on R^{3d+2}."""
    if d not in (1, 2, 4, 8):
        raise ValueError("cartan_cubic needs d in {1, 2, 4, 8}")
    n = 3 * d + 2
    x0 = CDElement.from_variables(n, 1, d)
    x1 = CDElement.from_variables(n, d + 1, d)
    x2 = CDElement.from_variables(n, 2 * d + 1, d)
    s = Polynomial.variable(n, n - 1)
    t = Polynomial.variable(n, n)
    n0, n1, n2 = cd_norm(x0), cd_norm(x1), cd_norm(x2)
    half_root3 = Coefficient(0, 0, Fraction(3, 2))  # 3*sqrt3/2
    triple = cd_real(cd_multiply(cd_multiply(x0, x1), x2))
    poly = Polynomial.sum(
        [
            t * t * t,
            (t * s * s).scale(-3),
            (t * (n0 + n1 - n2.scale(2))).scale(Fraction(3, 2)),
            (s * (n0 - n1)).scale(half_root3),
            triple.scale(half_root3 * 2),
        ],
        nvars=n,
    )
    return ConeSpec("cartan", (("d", d),), n, poly)


def hsiang_basis() -> list[list[list[Coefficient]]]:
    """Orthonormal basis (trace form) of trace-free symmetric 4x4 matrices, as coordinates x1..x9."""
    inv_r2 = Coefficient(0, Fraction(1, 2))  # 1/sqrt2
    basis = []
    for i in range(4):
        for j in range(i + 1, 4):
            b = [[Coefficient(0)] * 4 for _ in range(4)]
            b[i][j] = b[j][i] = inv_r2
            basis.append(b)
    diagonals = [
        ((1, -1, 0, 0), inv_r2),
        ((1, 1, -2, 0), Coefficient(0, 0, 0, Fraction(1, 6))),  # 1/sqrt6
        ((1, 1, 1, -3), Coefficient(0, 0, Fraction(1, 6))),  # 1/(2 sqrt3)
    ]
    for diag, scale in diagonals:
        b = [[Coefficient(0)] * 4 for _ in range(4)]
        for i, v in enumerate(diag):
            b[i][i] = scale * v
        basis.append(b)
    return basis


def hsiang_cubic() -> ConeSpec:
    """b_3(Y): the t-coefficient of det(Y - t I) on trace-free symmetric 4x4 matrices Y."""
    ring = 10  # x1..x9 coordinates, x10 plays t
    xs = Polynomial.variables(ring)
    t = xs[9]
    basis = hsiang_basis()
    y = [[Polynomial.sum([xs[k].scale(basis[k][r][c]) for k in range(9)], nvars=ring) for c in range(4)] for r in range(4)]
    for r in range(4):
        y[r][r] = y[r][r] - t
    char = determinant(y)
    b3 = char.coefficient_in(10, 1)
    poly = _drop_last_variable(b3)
    return ConeSpec("hsiang", (), 9, poly)


def _drop_last_variable(f: Polynomial) -> Polynomial:
    n = f.nvars - 1
    terms = {}
    for exps, c in f.terms():
        if exps[-1]:
            raise ValueError("polynomial still depends on the last variable")
        terms[exps[:-1]] = c
    return Polynomial(n, terms)


def reducible_example() -> ConeSpec:
    """x6 (2x1^2 + 2x2^2 - x3^2 - x4^2 - x5^2): an eigenfunction with non-radial weight."""
    return ConeSpec("reducible-example", (), 6, parse_poly("2*x1^2*x6 + 2*x2^2*x6 - x3^2*x6 - x4^2*x6 - x5^2*x6", 6))


def fkm_quartic(system: CliffordSystem, check: bool = True) -> ConeSpec:
    """F(y) = |y|^4 - 2 sum_i (y^T A_i y)^2 on R^{2m}."""
    if check:
        _require_valid(system)
    n = 2 * system.m
    y = Polynomial.variables(n)
    norm = Polynomial.sum([v * v for v in y], nvars=n)
    squares = [(_quadratic_form(a, y)) for a in system.matrices]
    poly = norm * norm - Polynomial.sum([s * s for s in squares], nvars=n).scale(2)
    return ConeSpec("fkm-quartic", _system_params(system), n, poly)


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Specialisation g = z0 (u^2 - v^2) + 2 z1 u v in variables (u, v, z0, z1) = (x1, x2, x3, x4)."""

    specialization: Polynomial
    sign: int
    discriminant: Polynomial
    source_variables: tuple[int, int, int, int]
    passed: bool


class NonCanonicalSystem(ValueError):
    """The system is not in the coordinates produced by the canonical constructors."""


def _lawson_specialization() -> Polynomial:
    return parse_poly("x1^2*x3 - x2^2*x3 + 2*x1*x2*x4", 4)


def irreducibility_certificate(system: CliffordSystem) -> IrreducibilityCertificate:
    """Specialise Phi to (u1, v1, z0, z1) and certify its u1-discriminant is not a square."""
    if system.provenance == CONJUGATED:
        raise NonCanonicalSystem("non-canonical coordinates: system was conjugated")
    phi = clifford_cubic(system).polynomial
    m = system.m
    keep = (1, m + 1, 2 * m + 1, 2 * m + 2)
    pieces = {}
    for exps, c in phi.terms():
        if any(e for i, e in enumerate(exps, start=1) if i not in keep):
            continue
        pieces[tuple(exps[i - 1] for i in keep)] = c
    spec = Polynomial(4, pieces)
    target = _lawson_specialization()
    if spec == target:
        sign = 1
    elif spec == -target:
        sign = -1
    else:
        raise NonCanonicalSystem(f"non-canonical coordinates: specialization is {format_poly(spec)}")
    a = spec.coefficient_in(1, 2)
    b = spec.coefficient_in(1, 1)
    c = spec.coefficient_in(1, 0)
    disc = b * b - (a * c).scale(4)
    try:
        poly_sqrt(disc)
        passed = False
    except NotSquare:
        passed = True
    return IrreducibilityCertificate(spec, sign, disc, keep, passed)
