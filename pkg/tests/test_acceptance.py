"""Runs every acceptance criterion at full size and prints one pass/fail line each."""

import pytest

from folded_rs import acceptance

# wall-clock budget per criterion, in seconds
BUDGETS = (60, 10, 60, 300, 10, 60, 30, 120, 1, 60)


@pytest.mark.parametrize("number", range(1, len(acceptance.CRITERIA) + 1))
def test_criterion(number, capsys):
    result = acceptance.CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    assert result.seconds <= BUDGETS[number - 1], f"took {result.seconds:.1f}s"
