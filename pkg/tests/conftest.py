import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pairdom.generate import nonisomorphic_graphs

# One [PASS]/[FAIL] line per acceptance criterion, echoed after the run.
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def graphs_up_to_4():
    return nonisomorphic_graphs(4)


@pytest.fixture(scope="session")
def graphs_up_to_5():
    return nonisomorphic_graphs(5)


@pytest.fixture(scope="session")
def graphs_up_to_6():
    return nonisomorphic_graphs(6)
