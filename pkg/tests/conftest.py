import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ybx.corpus import enumerate_solutions, fixture, fixtures  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run n = 4 enumeration")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


_CORPUS = None


def small_corpus():
    """Every solution with n <= 3 plus the examples fixtures."""
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = [s for n in (1, 2, 3) for s in enumerate_solutions(n)]
    return _CORPUS


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def biquandles(corpus):
    return [s for s in corpus if s.flags.biquandle]


@pytest.fixture(scope="session")
def examples():
    return {f.name: f.solution for f in fixtures()}


@pytest.fixture
def twist2():
    return fixture("twist2").solution
