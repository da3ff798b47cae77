"""Shared fixtures: the three presets plus one non-binary configuration."""

import sys

import pytest

from boxgap import GridConfig, preset

# big-integer decimal printing is exercised throughout the suite
try:
    sys.set_int_max_str_digits(1_000_000)
except AttributeError:
    pass


@pytest.fixture(scope="session")
def tiny():
    return preset("tiny")


@pytest.fixture(scope="session")
def paper():
    return preset("paper")


@pytest.fixture(scope="session")
def small():
    return preset("small")


@pytest.fixture(scope="session")
def alt():
    # m = 3 exercises the hub fan-out and the non-default column base
    return GridConfig(3, 5, 2)


# one verdict line per acceptance criterion, echoed after the run
ACCEPTANCE: list = []


def record(line: str) -> None:
    ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance summary")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
