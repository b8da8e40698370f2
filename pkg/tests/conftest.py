import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from packcolor.gadgets import random_outerplanar_subcubic  # noqa: E402
from packcolor.graph import from_edge_list  # noqa: E402


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture(scope="session")
def general_corpus():
    return [random_outerplanar_subcubic(3 + seed % 28, seed) for seed in range(120)]


@pytest.fixture(scope="session")
def block_corpus():
    return [random_outerplanar_subcubic(3 + seed % 25, seed, two_connected=True) for seed in range(120)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
