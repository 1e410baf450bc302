from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# Filled by test_acceptance; printed as one line per criterion at the end of the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
