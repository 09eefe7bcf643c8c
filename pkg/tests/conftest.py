import pytest

from dncrystal import data_file
from dncrystal.crystal import parse_path
from dncrystal.rigged import parse_pair


def _rows(name):
    text = data_file(name).read_text()
    return [parse_path(line, 4) for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="session")
def rows_single():
    return _rows("single_capacity.trace")


@pytest.fixture(scope="session")
def rows_mixed():
    return _rows("mixed_capacity.trace")


@pytest.fixture(scope="session")
def mixed_pair():
    return parse_pair(data_file("mixed_capacity.pair").read_text())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
