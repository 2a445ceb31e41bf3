import functools

import pytest
from hypothesis import strategies as st

from rightloops import example_path, read_loop
from rightloops.enumeration import enumerate_right_loops, isomorphism_classes
from rightloops.rightloop import RightLoopTable


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ex53():
    return read_loop(example_path())


@pytest.fixture(scope="session")
def ex53_path():
    return str(example_path())


@functools.lru_cache(maxsize=None)
def all_loops(n):
    return tuple(enumerate_right_loops(n))


@functools.lru_cache(maxsize=None)
def trgs(n):
    return tuple(enumerate_right_loops(n, ["trg"]))


@functools.lru_cache(maxsize=None)
def classes(n):
    return tuple(isomorphism_classes(n))


@st.composite
def right_loops(draw, min_order=1, max_order=5):
    """A uniformly shaped random right loop with identity 0."""
    n = draw(st.integers(min_order, max_order))
    op = [[0] * n for _ in range(n)]
    for x in range(n):
        op[x][0] = x
    for c in range(1, n):
        rest = draw(st.permutations([v for v in range(n) if v != c]))
        op[0][c] = c
        for x, v in zip(range(1, n), rest):
            op[x][c] = v
    return RightLoopTable(op)


def label_lookup(t):
    return {lab: i for i, lab in enumerate(t.labels)}
