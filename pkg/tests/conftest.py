import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from k3lattice.linalg import Matrix  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@st.composite
def int_matrices(draw, max_dim=8, lo=-20, hi=20, square=False):
    n = draw(st.integers(1, max_dim))
    m = n if square else draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m),
                         min_size=n, max_size=n))
    return Matrix(rows)


@st.composite
def symmetric_matrices(draw, max_dim=8, rational=True, lo=-9, hi=9):
    n = draw(st.integers(1, max_dim))
    entry = (st.fractions(min_value=lo, max_value=hi, max_denominator=6) if rational
             else st.integers(lo, hi))
    # sparse-ish diagonals exercise the zero-pivot path
    entry = st.one_of(st.just(0), entry)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(entry)
    return Matrix(a)


def random_unimodular(rng: random.Random, n: int, steps: int = 20) -> Matrix:
    q = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.random()
        i, j = rng.randrange(n), rng.randrange(n)
        if kind < 0.7 and i != j:
            c = rng.randint(-3, 3)
            for row in q:
                row[j] += c * row[i]
        elif kind < 0.85:
            for row in q:
                row[i], row[j] = row[j], row[i]
        else:
            for row in q:
                row[i] = -row[i]
    return Matrix(q)


@st.composite
def unimodular_matrices(draw, n):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_unimodular(random.Random(seed), n)


# -- acceptance reporting ------------------------------------------------------

_ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
