"""Exit criteria: one test per criterion, each printing a PASS/FAIL line with timing."""

import pytest

from pqlab.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"C{i}" for i in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.failures
