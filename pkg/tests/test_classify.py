from __future__ import annotations

import json

import pytest

from mincones.classify import (
    admissible_pairs,
    congruence_class_count,
    congruence_table,
    delta,
    hurwitz_radon,
    is_realizable,
    realizability_scan,
    sign_classes,
)

CONGRUENCE_COUNTS = (1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 1, 2, 2)


def brute_force_realizable(n):
    return any(1 <= n - 1 - 2 * m <= hurwitz_radon(m) for m in range(1, n // 2))


@pytest.mark.parametrize("m, rho", [(1, 1), (2, 2), (4, 4), (8, 8), (16, 9), (32, 10), (64, 12), (128, 16), (256, 17), (3, 1), (24, 8)])
def test_hurwitz_radon(m, rho):
    assert hurwitz_radon(m) == rho


def test_delta_table_and_period():
    assert [delta(q) for q in range(1, 9)] == [1, 2, 4, 4, 8, 8, 8, 8]
    for q in range(1, 17):
        assert delta(q + 8) == 16 * delta(q)


def test_delta_is_minimal():
    for q in range(1, 20):
        assert min(m for m in range(1, 5000) if q <= hurwitz_radon(m)) == delta(q)


def test_admissible_pairs_examples():
    assert admissible_pairs(4) == [(1, 1)]
    assert admissible_pairs(5) == []
    assert admissible_pairs(12) == [(1, 5), (3, 4)]


def test_realizability_matches_brute_force():
    for n in range(4, 3000):
        assert is_realizable(n) == brute_force_realizable(n), n


def test_scan_small():
    assert realizability_scan(4, 100) == [5, 9, 17, 33, 49, 65, 81, 97]
    assert is_realizable(2065)


def test_scan_guards():
    with pytest.raises(ValueError):
        realizability_scan(3, 10)
    with pytest.raises(ValueError):
        realizability_scan(10, 5)
    with pytest.raises(ValueError):
        realizability_scan(4, 10**6 + 1)


def test_sign_classes():
    assert sign_classes(3, 3) == [(3, 0)]
    assert sign_classes(4, 3) == [(3, 0), (2, 1)]
    assert sign_classes(8, 4) == [(4, 0), (3, 1), (2, 2)]


def test_table():
    assert tuple(c for _, c in congruence_table(21)) == CONGRUENCE_COUNTS


def test_report_rendering():
    r = congruence_class_count(12)
    assert r.render() == (
        "n: 12\nrealizable: true\nclass_count: 2\n"
        "pair: q=1 m=5\npair: q=3 m=4\n"
        "class: q=1 m=5 kplus=5 kminus=0\nclass: q=3 m=4 kplus=1 kminus=0\n"
    )
    assert json.loads(r.to_json())["class_count"] == 2
    assert "realizable: false" in congruence_class_count(9).render()


def test_small_dimension_rejected():
    with pytest.raises(ValueError):
        congruence_class_count(3)
