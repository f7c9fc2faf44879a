from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

from mincones.clifford import conjugate_system, direct_sum, irreducible_system
from mincones.cones import (
    ConeSpec,
    NonCanonicalSystem,
    cartan_cubic,
    clifford_cubic,
    det_weight_formula,
    determinant_cone,
    fkm_quartic,
    hsiang_cubic,
    irreducibility_certificate,
    parse_cone,
    quadric_cone,
    reducible_example,
)
from mincones.diffgeom import (
    gradient_norm_sq,
    hessian_trace_cube,
    laplacian,
    squared_norm,
    verify_eigenfunction,
)
from mincones.grammar import parse_poly
from mincones.matrix import Matrix, rational_orthogonal
from mincones.polynomial import Polynomial

from conftest import sym_vars, sympy_L, to_sympy


# -- Clifford cubics ---------------------------------------------------------------


def test_lawson_cubic():
    assert clifford_cubic(irreducible_system(1)).polynomial == parse_poly("x3*x1^2 - x3*x2^2 + 2*x4*x1*x2")


@pytest.mark.parametrize("m", [1, 2, 3])
def test_direct_sum_q1_layout(m):
    n = 2 * m + 2
    u = " + ".join(f"x{i}^2*x{2 * m + 1}" for i in range(1, m + 1))
    v = " - ".join(f"x{i}^2*x{2 * m + 1}" for i in range(m + 1, 2 * m + 1))
    w = " + ".join(f"2*x{i}*x{m + i}*x{2 * m + 2}" for i in range(1, m + 1))
    expected = parse_poly(f"{u} - {v} + {w}", n)
    assert clifford_cubic(direct_sum(1, m, 0)).polynomial == expected


@pytest.mark.parametrize("q, kp, km", [(1, 1, 0), (2, 1, 0), (3, 1, 0), (4, 1, 1), (5, 1, 0), (8, 1, 0)])
def test_clifford_identities(q, kp, km):
    s = direct_sum(q, kp, km)
    phi = clifford_cubic(s).polynomial
    n, size = phi.nvars, 2 * s.m
    xs = Polynomial.variables(n)
    y2 = Polynomial.sum([v * v for v in xs[:size]], nvars=n)
    z2 = Polynomial.sum([v * v for v in xs[size:]], nvars=n)
    forms = [phi.coefficient_in(size + 1 + i, 1).coefficient_in(size + 1 + i, 0) for i in range(q + 1)]
    # each y^T A_i y is the coefficient of z_i (phi is linear in z)
    assert gradient_norm_sq(phi) == (y2 * z2).scale(4) + Polynomial.sum([f * f for f in forms], nvars=n)
    assert laplacian(phi).is_zero()
    assert hessian_trace_cube(phi) == phi.scale(24 * (1 - q))
    r = verify_eigenfunction(phi)
    assert r.radial_constant == -8 and r.tau == q - 1


def test_lawson_operator_against_sympy():
    phi = clifford_cubic(irreducible_system(2)).polynomial
    xs = sym_vars(phi.nvars)
    expr = to_sympy(phi)
    assert sp.expand(sympy_L(expr, xs) + 8 * sum(x**2 for x in xs) * expr) == 0


def test_congruence_transport():
    s = irreducible_system(3)
    a = rational_orthogonal(11, 8, max_entry=2)
    d = rational_orthogonal(12, 4, max_entry=2)
    moved = clifford_cubic(conjugate_system(s, a, d)).polynomial
    assert moved.substitute_linear(Matrix.block_diag([a, d]).rows()) == clifford_cubic(s).polynomial


# -- quadric cones ---------------------------------------------------------------------


@pytest.mark.parametrize("p, q, text, weight", [
    (2, 2, "x1^2 + x2^2 - x3^2 - x4^2", -8),
    (2, 3, "2*x1^2 + 2*x2^2 - x3^2 - x4^2 - x5^2", -16),
    (4, 4, "3*x1^2 + 3*x2^2 + 3*x3^2 + 3*x4^2 - 3*x5^2 - 3*x6^2 - 3*x7^2 - 3*x8^2", -72),
])
def test_quadric_examples(p, q, text, weight):
    spec = quadric_cone(p, q)
    assert spec.polynomial == parse_poly(text, p + q)
    assert verify_eigenfunction(spec.polynomial).weight == Polynomial.constant(p + q, weight)


def test_quadric_plus_sign_is_not_an_eigenfunction():
    f = parse_poly("x1^2 + x2^2 + 2*x3^2 + 2*x4^2 + 2*x5^2")
    assert not verify_eigenfunction(f).is_eigenfunction


def test_quadric_guard():
    with pytest.raises(ValueError):
        quadric_cone(1, 3)


# -- determinant cones --------------------------------------------------------------------


def test_det_small_cases():
    assert determinant_cone(2).polynomial == parse_poly("x1*x4 - x2*x3")
    psi3 = determinant_cone(3).polynomial
    x = sp.Matrix(3, 3, sym_vars(9))
    assert to_sympy(psi3) == sp.expand(x.det())


@pytest.mark.parametrize("m", [2, 3, 4])
def test_det_weight_formula_matches_division(m):
    psi = determinant_cone(m).polynomial
    assert verify_eigenfunction(psi).weight == det_weight_formula(m)
    assert all(max(e) <= 1 for e, _ in psi.terms())


def test_det3_weight_against_sympy():
    xs = sym_vars(9)
    expr = sp.Matrix(3, 3, xs).det()
    ratio = sp.cancel(sympy_L(sp.expand(expr), xs) / expr)
    assert sp.expand(ratio + 2 * sum(x**2 for x in xs)) == 0
    assert det_weight_formula(3) == squared_norm(9).scale(-2)


def test_det_guard():
    with pytest.raises(ValueError):
        determinant_cone(7)
    with pytest.raises(ValueError):
        determinant_cone(1)


# -- Cartan cubics --------------------------------------------------------------------------


def test_cartan_d1_explicit():
    x1, x2, x3, x4, x5 = sym_vars(5)
    r3 = sp.sqrt(3)
    expected = (
        x5**3 - 3 * x5 * x4**2
        + sp.Rational(3, 2) * x5 * (x1**2 + x2**2 - 2 * x3**2)
        + sp.Rational(3, 2) * r3 * x4 * (x1**2 - x2**2)
        + 3 * r3 * x1 * x2 * x3
    )
    assert to_sympy(cartan_cubic(1).polynomial) == sp.expand(expected)


def test_cartan_d1_constant_at_random_points():
    f = cartan_cubic(1).polynomial
    xs = sym_vars(5)
    expr = to_sympy(f)
    lf = sympy_L(expr, xs)
    rng = random.Random(7)
    for _ in range(20):
        pt = {x: sp.Rational(rng.randint(-9, 9), rng.randint(1, 5)) for x in xs}
        fv = expr.subs(pt)
        if fv == 0:
            continue
        ratio = sp.nsimplify(sp.simplify(lf.subs(pt) / (fv * sum(v**2 for v in pt.values()))))
        assert ratio == -54


@pytest.mark.parametrize("d", [1, 2, 4])
def test_cartan_radial_and_harmonic(d):
    r = verify_eigenfunction(cartan_cubic(d).polynomial)
    assert r.is_harmonic and r.is_radial
    assert r.radial_constant == -54
    assert r.tau == d


def test_cartan_octonion_term_uses_sqrt3_only():
    f = cartan_cubic(8).polynomial
    assert f.nvars == 26
    for _, c in f.terms():
        assert c.b == 0 and c.d == 0


def test_cartan_guard():
    with pytest.raises(ValueError):
        cartan_cubic(3)


# -- Hsiang cubic -------------------------------------------------------------------------


def test_hsiang_against_sympy_construction():
    xs = sym_vars(9)
    r2, r6, r12 = sp.sqrt(2), sp.sqrt(6), 2 * sp.sqrt(3)
    y = sp.zeros(4, 4)
    k = 0
    for i in range(4):
        for j in range(i + 1, 4):
            y[i, j] += xs[k] / r2
            y[j, i] += xs[k] / r2
            k += 1
    for diag, var, scale in (((1, -1, 0, 0), xs[6], r2), ((1, 1, -2, 0), xs[7], r6), ((1, 1, 1, -3), xs[8], r12)):
        for i, v in enumerate(diag):
            y[i, i] += v * var / scale
    # Newton's identities with trace Y = 0: the t-coefficient of det(Y - tI) is -trace(Y^3)/3
    b3 = sp.expand(-(y**3).trace() / 3)
    assert sp.expand(to_sympy(hsiang_cubic().polynomial) - b3) == 0


def test_hsiang_radial_and_tau():
    r = verify_eigenfunction(hsiang_cubic().polynomial)
    assert r.is_harmonic and r.is_radial
    psi = verify_eigenfunction(determinant_cone(3).polynomial)
    assert r.tau == psi.tau


# -- reducible example and FKM quartic ---------------------------------------------------------


def test_reducible_example():
    r = verify_eigenfunction(reducible_example().polynomial)
    assert r.weight == parse_poly("-28*x1^2 - 28*x2^2 - 10*x3^2 - 10*x4^2 - 10*x5^2 - 16*x6^2")
    assert not r.is_radial
    assert not r.is_harmonic
    assert laplacian(reducible_example().polynomial) == parse_poly("2*x6", 6)


def test_fkm_q1():
    assert fkm_quartic(irreducible_system(1)).polynomial == parse_poly("-x1^4 - 2*x1^2*x2^2 - x2^4")


def test_fkm_shape_and_parity():
    s = direct_sum(2, 2, 0)
    f = fkm_quartic(s).polynomial
    assert f.nvars == 2 * s.m and f.degree() == 4 and f.is_homogeneous()
    assert f.substitute_linear(Matrix.identity(f.nvars).scale(-1).rows()) == f


# -- irreducibility certificate ---------------------------------------------------------------


@pytest.mark.parametrize("system", [irreducible_system(q) for q in (1, 2, 4, 8)] + [direct_sum(1, 2, 0)])
def test_certificate_passes(system):
    cert = irreducibility_certificate(system)
    assert cert.passed
    assert cert.discriminant == parse_poly("4*x2^2*x3^2 + 4*x2^2*x4^2")
    assert cert.specialization == parse_poly("x1^2*x3 - x2^2*x3 + 2*x1*x2*x4").scale(cert.sign)


def test_certificate_rejects_conjugated_system():
    s = irreducible_system(2)
    b = conjugate_system(s, Matrix.identity(4), Matrix.identity(3))
    with pytest.raises(NonCanonicalSystem, match="non-canonical coordinates"):
        irreducibility_certificate(b)


# -- serialization ----------------------------------------------------------------------------


@pytest.mark.parametrize("spec", [
    clifford_cubic(irreducible_system(3)),
    quadric_cone(2, 5),
    determinant_cone(3),
    cartan_cubic(2),
    hsiang_cubic(),
    reducible_example(),
    fkm_quartic(irreducible_system(2)),
])
def test_cone_round_trip(spec):
    text = spec.serialize()
    assert text.startswith(f"cone family={spec.family} n={spec.n} ")
    back = parse_cone(text)
    assert back == spec
    assert verify_eigenfunction(back.polynomial).fields() == verify_eigenfunction(spec.polynomial).fields()


def test_cone_spec_validation():
    with pytest.raises(ValueError):
        ConeSpec("bogus", (), 2, parse_poly("x1*x2"))
    with pytest.raises(ValueError):
        ConeSpec("quadric", (), 3, parse_poly("x1*x2"))
