"""Which ambient dimensions carry Clifford minimal cubics, and how many congruence classes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

_DELTA_BASE = (1, 2, 4, 4, 8, 8, 8, 8)
SCAN_LIMIT = 10**6


def hurwitz_radon(m: int) -> int:
    """rho(2^s * odd) = 8a + 2^b where s = 4a + b, 0 <= b <= 3."""
    if m < 1:
        raise ValueError("hurwitz_radon needs m >= 1")
    s = (m & -m).bit_length() - 1
    a, b = divmod(s, 4)
    return 8 * a + (1 << b)


def delta(q: int) -> int:
    """Smallest m such that an irreducible Clifford system with q+1 generators acts on R^{2m}."""
    if q < 1:
        raise ValueError("delta needs q >= 1")
    periods, r = divmod(q - 1, 8)
    return _DELTA_BASE[r] * 16**periods


def admissible_pairs(n: int) -> list[tuple[int, int]]:
    """All (q, m) with 2m + q + 1 = n and 1 <= q <= rho(m), ordered by q."""
    _check_n(n)
    pairs = []
    for m in range((n - 2) // 2, 0, -1):
        q = n - 1 - 2 * m
        if 1 <= q <= hurwitz_radon(m):
            pairs.append((q, m))
    return pairs


def is_realizable(n: int) -> bool:
    _check_n(n)
    if n % 2 == 0:
        return True
    # n odd forces q even; q <= rho(m) <=> delta(q) | m, and delta grows geometrically
    q = 2
    while True:
        m2 = n - 1 - q
        if m2 < 2:
            return False
        m = m2 // 2
        dq = delta(q)
        if dq > m:
            return False
        if m % dq == 0:
            return True
        q += 2


def realizability_scan(n_min: int, n_max: int) -> list[int]:
    """Every non-realizable n in [n_min, n_max]."""
    if not (4 <= n_min <= n_max <= SCAN_LIMIT):
        raise ValueError(f"scan range must satisfy 4 <= from <= to <= {SCAN_LIMIT}")
    return [n for n in range(n_min, n_max + 1) if not is_realizable(n)]


@dataclass(frozen=True)
class DimensionReport:
    n: int
    admissible_pairs: tuple[tuple[int, int], ...]
    class_list: tuple[tuple[int, int, int, int], ...] = field(default_factory=tuple)

    @property
    def realizable(self) -> bool:
        return bool(self.admissible_pairs)

    @property
    def class_count(self) -> int:
        return len(self.class_list)

    def render(self) -> str:
        lines = [
            f"n: {self.n}",
            f"realizable: {str(self.realizable).lower()}",
            f"class_count: {self.class_count}",
        ]
        lines += [f"pair: q={q} m={m}" for q, m in self.admissible_pairs]
        lines += [f"class: q={q} m={m} kplus={kp} kminus={km}" for q, m, kp, km in self.class_list]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "realizable": self.realizable,
            "class_count": self.class_count,
            "pair": [{"q": q, "m": m} for q, m in self.admissible_pairs],
            "class": [{"q": q, "m": m, "kplus": kp, "kminus": km} for q, m, kp, km in self.class_list],
        }
        return json.dumps(payload, sort_keys=True) + "\n"


def sign_classes(q: int, k: int) -> list[tuple[int, int]]:
    """Representatives (k+, k-) of direct sums of k irreducible blocks, up to equivalence.

    Only for q = 0 mod 4 does flipping the sign of a summand change the class;
    (k+, k-) and (k-, k+) are identified because negating every generator
    preserves the span.
    """
    if q % 4:
        return [(k, 0)]
    return [(k - j, j) for j in range(k // 2 + 1)]


def congruence_class_count(n: int) -> DimensionReport:
    _check_n(n)
    pairs = admissible_pairs(n)
    classes = []
    for q, m in pairs:
        k = m // delta(q)
        classes += [(q, m, kp, km) for kp, km in sign_classes(q, k)]
    return DimensionReport(n, tuple(pairs), tuple(classes))


def congruence_table(max_n: int) -> list[tuple[int, int]]:
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    return [(n, congruence_class_count(n).class_count) for n in range(4, max_n + 1)]


def _check_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"ambient dimension must be >= 4, got {n}")
