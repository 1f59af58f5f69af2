import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mertens_matrices.arith import mertens_table  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

# filled by test_acceptance.record(); printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def mt_small():
    return mertens_table(10_000)


@pytest.fixture(scope="session")
def mt_large():
    return mertens_table(100_000)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
