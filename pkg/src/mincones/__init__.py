"""Exact symbolic workbench for algebraic minimal cones."""

from .coefficient import Coefficient
from .polynomial import DimensionError, NotDivisible, NotSquare, Polynomial, exact_divide, poly_sqrt
from .grammar import PolySyntaxError, format_poly, parse_poly
from .diffgeom import VerificationReport, mean_curvature_operator, tau_invariant, verify_eigenfunction
from .clifford import CliffordSystem, direct_sum, hr_family, irreducible_system, verify_system
from .cones import ConeSpec, clifford_cubic, determinant_cone, cartan_cubic, hsiang_cubic, quadric_cone
from .classify import congruence_class_count, delta, hurwitz_radon, is_realizable

__version__ = "0.1.0"

__all__ = [
    "Coefficient",
    "DimensionError",
    "NotDivisible",
    "NotSquare",
    "Polynomial",
    "exact_divide",
    "poly_sqrt",
    "PolySyntaxError",
    "format_poly",
    "parse_poly",
    "VerificationReport",
    "mean_curvature_operator",
    "tau_invariant",
    "verify_eigenfunction",
    "CliffordSystem",
    "direct_sum",
    "hr_family",
    "irreducible_system",
    "verify_system",
    "ConeSpec",
    "clifford_cubic",
    "determinant_cone",
    "cartan_cubic",
    "hsiang_cubic",
    "quadric_cone",
    "congruence_class_count",
    "delta",
    "hurwitz_radon",
    "is_realizable",
]
