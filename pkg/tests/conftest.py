import random

import pytest
from hypothesis import strategies as st

from braidhurwitz.braid import BraidWord

ACCEPTANCE_LINES: list[str] = []


def letters(n, max_size=10):
    gens = [x for i in range(1, n) for x in (i, -i)]
    return st.lists(st.sampled_from(gens), max_size=max_size)


def braid_words(n=3, max_size=10):
    return letters(n, max_size).map(lambda ls: BraidWord(n, tuple(ls)))


def random_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    gens = [x for i in range(1, n) for x in (i, -i)]
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))


@pytest.fixture
def rng():
    return random.Random(20240531)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
