"""Shared helpers: hypothesis profile and a sympy oracle for independent cross-checks."""

from __future__ import annotations

from fractions import Fraction

import sympy as sp
from hypothesis import HealthCheck, settings, strategies as st

from mincones.coefficient import Coefficient
from mincones.polynomial import Polynomial

settings.register_profile(
    "repro",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

RADICALS = (sp.Integer(1), sp.sqrt(2), sp.sqrt(3), sp.sqrt(6))


def sym_vars(n: int):
    return sp.symbols(f"x1:{n + 1}")


def coeff_to_sympy(c: Coefficient):
    return sum(sp.Rational(p.numerator, p.denominator) * r for p, r in zip(c.parts, RADICALS))


def to_sympy(f: Polynomial):
    xs = sym_vars(f.nvars)
    total = sp.Integer(0)
    for exps, c in f.terms():
        term = coeff_to_sympy(c)
        for x, e in zip(xs, exps):
            term *= x**e
        total += term
    return sp.expand(total)


def sympy_L(expr, xs):
    """|grad f|^2 Lap f - sum_ij f_i f_j f_ij computed from scratch in sympy."""
    grad = [sp.diff(expr, x) for x in xs]
    lap = sum(sp.diff(g, x) for g, x in zip(grad, xs))
    quad = sum(grad[i] * grad[j] * sp.diff(grad[i], xs[j]) for i in range(len(xs)) for j in range(len(xs)))
    return sp.expand(sum(g * g for g in grad) * lap - quad)


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
coefficients = st.builds(
    Coefficient,
    fractions,
    st.one_of(st.just(Fraction(0)), fractions),
    st.one_of(st.just(Fraction(0)), fractions),
    st.one_of(st.just(Fraction(0)), fractions),
)
rational_coefficients = st.builds(Coefficient, fractions)


def polynomials(nvars: int = 3, max_terms: int = 4, max_deg: int = 3, coeffs=coefficients):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: Polynomial(nvars, d))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
