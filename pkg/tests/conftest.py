import os

import pytest
from hypothesis import HealthCheck, settings

from acibetti.betti_core import BettiTable

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=2000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# golden tables A (type 11), B (type 2) and C (type 3)
TABLE_A = {
    "codim": 3,
    "F": [
        [8, 9, 10, 14],
        [17, 18] + [19] * 5 + [20] * 4 + [21] * 3,
        [20] * 3 + [21] * 4 + [22] * 4,
    ],
}
TABLE_B = {"codim": 3, "F": [[4, 4, 6, 7], [7, 8, 10, 10, 11], [11, 14]]}
TABLE_C = {"codim": 3, "F": [[2, 2, 2, 5], [4, 4, 4, 4, 6, 6], [5, 5, 7]]}


@pytest.fixture
def table_a():
    return BettiTable.from_json(TABLE_A)


@pytest.fixture
def table_b():
    return BettiTable.from_json(TABLE_B)


@pytest.fixture
def table_c():
    return BettiTable.from_json(TABLE_C)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
