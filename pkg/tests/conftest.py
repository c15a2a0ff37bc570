import subprocess
import sys

import pytest

from dccd import Design
from dccd.catalog import TABLE1_BLOCKS

# Table 3 of the source design tables, columns B1..B35, new points relabelled 8..15 -> 7..14.
_T3_ROWS = (
    "8,10,11,12,0,0,0,0,0,0,8,9,12,13,2,8,9,10,11,0,1,8,13,9,10,5,5,5,5,5,5,8,9,10,11",
    "9,14,13,15,1,8,11,12,9,4,4,4,4,4,4,15,14,13,12,6,6,6,6,6,6,6,8,9,10,14,3,14,13,12,15",
    "2,2,2,2,2,10,14,13,15,5,11,10,14,15,3,3,3,3,3,3,4,12,14,11,15,2,13,12,11,15,1,1,1,1,1",
)
TABLE3_BLOCKS = [
    [x - 1 if x >= 8 else x for x in col] for col in zip(*([int(x) for x in r.split(",")] for r in _T3_ROWS))
]

# Table 4, symbols a, b, c, d relabelled 6, 7, 8, 9.
TABLE4_BLOCKS = [
    [0, 1, 2, 3], [6, 7, 2, 3], [8, 9, 2, 3], [4, 5, 2, 3], [4, 5, 6, 8],
    [4, 5, 7, 9], [4, 5, 0, 1], [6, 9, 0, 1], [7, 8, 0, 1],
]

TABLE5_BLOCKS = [[0, 1, 2, 3], [2, 3, 4, 5], [4, 5, 0, 1]]


@pytest.fixture
def table1_circular():
    return Design(7, 3, TABLE1_BLOCKS, circular=True)


@pytest.fixture
def table1_linear():
    return Design(7, 3, TABLE1_BLOCKS, circular=False)


@pytest.fixture
def table3():
    return Design(15, 3, TABLE3_BLOCKS, circular=False)


@pytest.fixture
def table4():
    return Design(10, 4, TABLE4_BLOCKS, circular=True)


@pytest.fixture
def run_cli():
    def run(args, stdin=None, env=None):
        return subprocess.run(
            [sys.executable, "-m", "dccd", *args],
            input=stdin,
            capture_output=True,
            text=True,
            check=False,
            timeout=120,
            env=env,
        )

    return run


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
