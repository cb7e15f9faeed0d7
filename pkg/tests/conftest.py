import numpy as np
import pytest
from hypothesis import strategies as st

from pacontract.mapping import SelfMap
from pacontract.space import FiniteBSpace, discrete_space


@pytest.fixture
def discrete3():
    return discrete_space(3)


@pytest.fixture
def staircase():
    return SelfMap((1, 2, 2))


def squared_line(n):
    x = np.arange(n, dtype=float)
    return (x[:, None] - x[None, :]) ** 2


@st.composite
def metric_matrices(draw, min_n=1, max_n=5):
    """Integer edge weights completed by shortest paths: always a metric."""
    n = draw(st.integers(min_n, max_n))
    w = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w[i][j] = w[j][i] = draw(st.integers(1, 9))
    for k in range(n):
        for i in range(n):
            for j in range(n):
                w[i][j] = min(w[i][j], w[i][k] + w[k][j])
    return np.array(w, dtype=float)


@st.composite
def spaces_and_maps(draw, min_n=1, max_n=4, max_power=3):
    d = draw(metric_matrices(min_n, max_n))
    p = draw(st.integers(1, max_power))
    space = FiniteBSpace.from_matrix(d ** p)
    table = draw(st.lists(st.integers(0, space.n - 1), min_size=space.n, max_size=space.n))
    return space, SelfMap(tuple(table))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
