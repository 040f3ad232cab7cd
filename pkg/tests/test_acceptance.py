"""Runs every acceptance criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or on
failure); the same checklist backs the ``cubeball selftest`` command.
"""

import pytest

from cubeball import acceptance

_IDS = [f"{num:02d}_{name.replace(' ', '_').replace('-', '_')}"
        for num, name, _ in acceptance.CRITERIA]


@pytest.mark.parametrize(
    "number,name",
    [(num, name) for num, name, _ in acceptance.CRITERIA],
    ids=_IDS,
)
def test_criterion(number, name):
    result = acceptance.run_criterion(number)
    status = "PASS" if result.passed else "FAIL"
    print(f"ACCEPTANCE {result.number:02d} {result.name}: {status} ({result.detail})")
    assert result.passed, f"criterion {number} ({name}): {result.detail}"
