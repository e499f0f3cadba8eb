import pytest

from orientseq.core import RingSequence


def ring(text, q):
    return RingSequence.parse(text, q)


@pytest.fixture
def seq():
    return ring


def pytest_addoption(parser):
    parser.addoption("--rng-seed", type=int, default=20240601, help="seed for randomized tests")


@pytest.fixture
def rng(request):
    import random

    return random.Random(request.config.getoption("--rng-seed"))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
