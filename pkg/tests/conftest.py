import random

import pytest

from cliffinner.clifford import Multivector
from cliffinner.scalars import Scalar

ACCEPTANCE_LINES = []


def random_scalar(rng: random.Random, span: int = 5, dens: int = 4) -> Scalar:
    return Scalar(rng.randint(-span, span), rng.randint(-span, span)) / rng.randint(1, dens)


def random_multivector(rng: random.Random, n: int, terms: int = 6) -> Multivector:
    return Multivector(n, {rng.randrange(1 << n): random_scalar(rng) for _ in range(terms)})


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
