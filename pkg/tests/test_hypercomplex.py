from __future__ import annotations

import pytest

from mincones.hypercomplex import (
    CDElement,
    basis_unit,
    cd_conjugate,
    cd_norm,
    cd_product,
    left_multiplication,
)
from mincones.polynomial import DimensionError, Polynomial


@pytest.mark.parametrize("d", [1, 2, 4, 8])
def test_norm_composition(d):
    x = CDElement.from_variables(2 * d, 1, d)
    y = CDElement.from_variables(2 * d, d + 1, d)
    assert cd_norm(x * y) == cd_norm(x) * cd_norm(y)


@pytest.mark.parametrize("d", [2, 4, 8])
def test_imaginary_units_square_to_minus_one(d):
    for k in range(1, d):
        e = basis_unit(d, k)
        assert cd_product(e, e) == [-1] + [0] * (d - 1)


def test_quaternions_are_associative_octonions_are_not():
    e4 = [basis_unit(4, k) for k in range(4)]
    for a in e4:
        for b in e4:
            for c in e4:
                assert cd_product(cd_product(a, b), c) == cd_product(a, cd_product(b, c))
    e = [basis_unit(8, k) for k in range(8)]
    assert cd_product(cd_product(e[1], e[2]), e[4]) == [-x for x in cd_product(e[1], cd_product(e[2], e[4]))]


def test_conjugate_reverses_products():
    x = CDElement.from_variables(16, 1, 8)
    y = CDElement.from_variables(16, 9, 8)
    assert cd_conjugate(x * y) == cd_conjugate(y) * cd_conjugate(x)


def test_norm_is_euclidean():
    x = CDElement.from_variables(8, 1, 8)
    assert cd_norm(x) == Polynomial.sum([v * v for v in Polynomial.variables(8)])


@pytest.mark.parametrize("d", [2, 4, 8])
def test_left_multiplication_is_skew_orthogonal(d):
    for k in range(1, d):
        m = left_multiplication(d, k)
        for i in range(d):
            for j in range(d):
                assert m[i][j] == -m[j][i]
                assert sum(m[i][t] * m[j][t] for t in range(d)) == (1 if i == j else 0)


def test_dimension_checks():
    with pytest.raises(DimensionError):
        CDElement(tuple(Polynomial.variables(3)))
    with pytest.raises(DimensionError):
        CDElement.from_variables(4, 1, 2) * CDElement.from_variables(4, 1, 4)
