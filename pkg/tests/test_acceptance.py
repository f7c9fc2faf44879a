"""One test per reproduction criterion; each prints a single PASS/FAIL line.

The lines are also repeated in the terminal summary so they survive output capture.
"""

from __future__ import annotations

import pytest

from mincones.acceptance import CRITERIA, EXTENDED_BUDGET, run_criterion

RESULTS: list[str] = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion):
    outcome = run_criterion(criterion, budget=EXTENDED_BUDGET)
    line = outcome.line(timing=True)
    RESULTS.append(line)
    print(line)
    assert outcome.ok, line
