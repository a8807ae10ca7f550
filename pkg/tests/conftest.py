import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from inducedmatch.types import validate_dissimilarity  # noqa: E402

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def report():
    """Record one acceptance line; the terminal summary prints them all."""

    def record(criterion: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((criterion, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")


def chain_matrix(weights, n=4, other=10.0):
    d = np.full((n, n), other)
    np.fill_diagonal(d, 0.0)
    for k, w in enumerate(weights):
        d[k, k + 1] = d[k + 1, k] = w
    return d


@pytest.fixture
def chain():
    return validate_dissimilarity(chain_matrix([1, 2, 3]))


@pytest.fixture
def reversed_chain():
    return validate_dissimilarity(chain_matrix([3, 2, 1]))
