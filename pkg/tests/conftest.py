import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import connected_graphs  # noqa: E402

CRITERIA = []


@pytest.fixture(scope="session")
def small_connected():
    """All connected graphs with at most 6 vertices."""
    return connected_graphs(6)


@pytest.fixture(scope="session")
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(number, ok, detail):
        CRITERIA.append((number, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(CRITERIA, key=lambda x: x[0]):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
