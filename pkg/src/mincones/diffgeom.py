"""The normalized mean curvature operator L and the invariants built on it.

    L(f) = |grad f|^2 * Laplacian(f) - sum_{i,j} f_i f_j f_ij

A homogeneous f is an eigenfunction when L(f) = weight * f for a polynomial
weight; it is radial when the weight is c * |x|^2.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional

from .coefficient import Coefficient
from .grammar import format_poly
from .polynomial import NotDivisible, Polynomial, exact_divide


def gradient(f: Polynomial) -> list[Polynomial]:
    return [f.derivative(i) for i in range(1, f.nvars + 1)]


def hessian(f: Polynomial, grad: Optional[list[Polynomial]] = None) -> list[dict[int, Polynomial]]:
    """Sparse symmetric Hessian: row i maps j to f_ij for the nonzero entries.

    Each unordered pair is differentiated once.
    """
    n = f.nvars
    grad = gradient(f) if grad is None else grad
    rows: list[dict[int, Polynomial]] = [{} for _ in range(n)]
    for i in range(n):
        gi = grad[i]
        if gi.is_zero():
            continue
        for j in range(i, n):
            h = gi.derivative(j + 1)
            if not h.is_zero():
                rows[i][j] = h
                rows[j][i] = h
    return rows


def laplacian(f: Polynomial) -> Polynomial:
    return Polynomial.sum([f.derivative(i).derivative(i) for i in range(1, f.nvars + 1)], nvars=f.nvars)


def gradient_norm_sq(f: Polynomial) -> Polynomial:
    return Polynomial.sum([g * g for g in gradient(f)], nvars=f.nvars)


def mean_curvature_operator(f: Polynomial) -> Polynomial:
    n = f.nvars
    grad = gradient(f)
    hess = hessian(f, grad)
    lap = Polynomial.sum([hess[i][i] for i in range(n) if i in hess[i]], nvars=n)
    # sum_ij f_i f_j f_ij = sum_i f_i * (sum_j f_ij f_j)
    inner = []
    for i in range(n):
        if grad[i].is_zero() or not hess[i]:
            continue
        row = Polynomial.sum([h * grad[j] for j, h in sorted(hess[i].items()) if not grad[j].is_zero()], nvars=n)
        inner.append(grad[i] * row)
    quad = Polynomial.sum(inner, nvars=n)
    if lap.is_zero():
        return -quad
    norm = Polynomial.sum([g * g for g in grad], nvars=n)
    return norm * lap - quad


def hessian_trace_cube(f: Polynomial) -> Polynomial:
    """trace(H^3) = sum_{i,j,k} f_ij f_jk f_ki."""
    n = f.nvars
    hess = hessian(f)
    pieces = []
    for i in range(n):
        row_i = hess[i]
        if not row_i:
            continue
        # (H^2)_{ik} for k >= i, then weight by f_ki; off-diagonal pairs count twice
        sq: dict[int, list[Polynomial]] = {}
        for j, hij in row_i.items():
            for k, hjk in hess[j].items():
                if k >= i and k in row_i:
                    sq.setdefault(k, []).append(hij * hjk)
        for k in sorted(sq):
            term = Polynomial.sum(sq[k], nvars=n) * row_i[k]
            pieces.append(term if k == i else term * 2)
    return Polynomial.sum(pieces, nvars=n)


def squared_norm(nvars: int) -> Polynomial:
    """|x|^2 = x1^2 + ... + xn^2."""
    return Polynomial.sum([x * x for x in Polynomial.variables(nvars)], nvars=nvars)


def radial_constant(weight: Polynomial) -> Optional[Coefficient]:
    """c when weight == c * |x|^2 exactly, else None (c read off the x1^2 coefficient)."""
    n = weight.nvars
    if n == 0:
        return None
    exps = [0] * n
    exps[0] = 2
    c = weight.coefficient(exps)
    if (weight - squared_norm(n).scale(c)).is_zero():
        return c
    return None


def tau_invariant(f: Polynomial, lf: Optional[Polynomial] = None) -> Optional[Coefficient]:
    """c with |x|^2 trace(H^3) = 3 c L(f), or None when L(f) = 0 or the ratio is not constant."""
    lf = mean_curvature_operator(f) if lf is None else lf
    if lf.is_zero():
        return None
    num = squared_norm(f.nvars) * hessian_trace_cube(f)
    try:
        ratio = exact_divide(num, lf.scale(3))
    except NotDivisible:
        return None
    if not ratio.is_constant():
        return None
    return ratio.constant_term()


@dataclass(frozen=True)
class VerificationReport:
    is_eigenfunction: bool
    weight: Optional[Polynomial]
    is_radial: bool
    radial_constant: Optional[Coefficient]
    tau: Optional[Coefficient]
    is_harmonic: bool
    witness: Optional[str]
    elapsed_ms: float

    def fields(self, timing: bool = False) -> dict[str, str]:
        def opt(x) -> str:
            return "undefined" if x is None else str(x)

        out = {
            "eigenfunction": str(self.is_eigenfunction).lower(),
            "weight": "undefined" if self.weight is None else format_poly(self.weight),
            "radial": str(self.is_radial).lower(),
            "radial_constant": opt(self.radial_constant),
            "tau": opt(self.tau),
            "harmonic": str(self.is_harmonic).lower(),
            "witness": "none" if self.witness is None else self.witness,
        }
        if timing:
            out["elapsed_ms"] = f"{self.elapsed_ms:.1f}"
        return out

    def render(self, timing: bool = False) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.fields(timing).items())

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.fields(timing), sort_keys=True) + "\n"


def verify_eigenfunction(f: Polynomial) -> VerificationReport:
    """Compute L(f) in full, divide by f exactly, then classify the weight."""
    if f.is_constant():
        raise ValueError("verify_eigenfunction needs a nonconstant polynomial")
    start = time.perf_counter()
    lf = mean_curvature_operator(f)
    harmonic = laplacian(f).is_zero()
    try:
        weight = exact_divide(lf, f)
    except NotDivisible as exc:
        exps, coeff = exc.witness
        witness = format_poly(Polynomial.monomial(exps, coeff))
        return VerificationReport(
            False, None, False, None, None, harmonic, witness, (time.perf_counter() - start) * 1e3
        )
    c = radial_constant(weight)
    tau = tau_invariant(f, lf)
    return VerificationReport(
        True, weight, c is not None, c, tau, harmonic, None, (time.perf_counter() - start) * 1e3
    )
