"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with -s to watch the lines stream; the whole suite is exhaustive and
exact (no tolerances) and finishes in about two minutes.
"""

import pytest

from agcyclic import acceptance


@pytest.mark.parametrize(
    "criterion",
    acceptance.ALL_CRITERIA,
    ids=[f"criterion_{i}" for i in range(1, 11)],
)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} criterion {result.number}: {result.title} "
          f"[{result.seconds:.1f}s] ({result.detail})")
    assert result.passed, f"criterion {result.number}: {result.detail}"
