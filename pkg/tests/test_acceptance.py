"""Acceptance criteria, each at its stated tolerance.

Every test prints one ``[PASS]``/``[FAIL]`` line straight to the terminal
(outside pytest's capture) and then asserts the criterion.
"""

import pytest

from paraglider.acceptance import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.failures[:5]
