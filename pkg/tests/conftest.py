from __future__ import annotations

import random

import pytest

from galoishull.field import field_new
from galoishull.linalg import Matrix


def random_full_rank(F, k: int, n: int, rng: random.Random) -> Matrix:
    while True:
        G = Matrix.random(F, k, n, rng)
        if G.rank() == k:
            return G


def random_points(F, n: int, rng: random.Random) -> list[int]:
    return rng.sample(range(F.q), n)


def random_multipliers(F, n: int, rng: random.Random) -> list[int]:
    return [rng.randrange(1, F.q) for _ in range(n)]


@pytest.fixture
def gf9():
    return field_new(3, 2)


@pytest.fixture
def gf25():
    return field_new(5, 2)


@pytest.fixture
def gf27():
    return field_new(3, 3)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
