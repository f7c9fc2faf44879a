from __future__ import annotations

from fractions import Fraction

import pytest

from mincones.classify import delta, hurwitz_radon
from mincones.clifford import (
    CONJUGATED,
    CliffordSystem,
    ResourceGuard,
    conjugate_system,
    direct_sum,
    hr_family,
    irreducible_system,
    omega_trace_abs,
    parse_system,
    system_invariants,
    verify_system,
)
from mincones.matrix import Matrix, rational_orthogonal


@pytest.mark.parametrize("k", range(0, 13))
def test_hr_family(k):
    fam = hr_family(k)
    assert fam.dim == delta(k + 1)
    eye = Matrix.identity(fam.dim)
    for i, a in enumerate(fam.matrices):
        assert a.T == -a
        assert a @ a == -eye
        for b in fam.matrices[i + 1 :]:
            assert (a @ b + b @ a).is_zero()


@pytest.mark.parametrize("q", range(1, 10))
def test_irreducible_systems_verify(q):
    s = irreducible_system(q)
    assert s.m == delta(q)
    assert verify_system(s)


def test_example_pair_q1():
    s = irreducible_system(1)
    assert s.matrices[0] == Matrix([[1, 0], [0, -1]])
    assert s.matrices[1] == Matrix([[0, 1], [1, 0]])


def test_linear_and_cube_identities():
    # symbolic z reduced to generic rational directions
    s = irreducible_system(3)
    size = 2 * s.m
    z1 = [Fraction(1, 2), -2, 3, Fraction(1, 3)]
    z2 = [1, 0, Fraction(-5, 4), 2]

    def a_z(z):
        out = Matrix.zeros(size)
        for c, a in zip(z, s.matrices):
            out = out + a.scale(c)
        return out

    inner = sum(Fraction(x) * y for x, y in zip(z1, z2))
    norm = sum(Fraction(x) ** 2 for x in z1)
    p, r = a_z(z1), a_z(z2)
    assert p @ r + r @ p == Matrix.identity(size).scale(2 * inner)
    assert p @ p @ p == p.scale(norm)


def test_direct_sum_shapes_and_omega():
    s = direct_sum(4, 2, 0)
    assert (s.q, s.m) == (4, 8)
    assert verify_system(s)
    assert omega_trace_abs(s) == 16
    assert omega_trace_abs(direct_sum(4, 1, 1)) == 0
    assert omega_trace_abs(direct_sum(3, 1, 0)) is None


def test_verify_reports_failing_relation():
    s = irreducible_system(2)
    bad = CliffordSystem(2, s.m, (s.matrices[0], s.matrices[0], s.matrices[2]))
    check = verify_system(bad)
    assert not check and check.relation == (0, 1)
    nonsym = CliffordSystem(1, 1, (Matrix([[1, 1], [0, -1]]), Matrix([[0, 1], [1, 0]])))
    assert verify_system(nonsym).relation == (0, 0)


def test_serialization_round_trip():
    s = direct_sum(2, 1, 1)
    back = parse_system(s.serialize())
    assert back.matrices == s.matrices
    assert s.serialize().splitlines()[0] == "clifford q=2 m=4"


def test_conjugation_preserves_validity_and_invariants():
    s = direct_sum(4, 2, 0)
    a = rational_orthogonal(3, 16, max_entry=1)
    d = rational_orthogonal(5, 5)
    b = conjugate_system(s, a, d)
    assert b.provenance == CONJUGATED
    assert verify_system(b)
    assert system_invariants(b) == system_invariants(s)


def test_conjugation_rejects_non_orthogonal():
    s = irreducible_system(1)
    with pytest.raises(ValueError):
        conjugate_system(s, Matrix([[2, 0], [0, 1]]), Matrix.identity(2))


def test_hurwitz_radon_duality():
    for q in range(1, 13):
        for m in range(1, 257):
            assert (q <= hurwitz_radon(m)) == (m % delta(q) == 0)


def test_constructibility_matches_duality():
    for q in range(1, 9):
        for k in (1, 2):
            assert verify_system(direct_sum(q, k, 0))


def test_resource_guard():
    with pytest.raises(ResourceGuard):
        direct_sum(9, 64, 0)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        direct_sum(0, 1, 0)
    with pytest.raises(ValueError):
        direct_sum(2, 0, 0)
