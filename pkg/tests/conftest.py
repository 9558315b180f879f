import random

import pytest

from c34jac.curve import random_curve
from c34jac.divisor import random_typical, random_typical_with_points
from c34jac.errors import Atypical
from c34jac.field import mk_field


def make_curve(p, label="test"):
    return random_curve(mk_field(p), random.Random(f"{label}:{p}"))


@pytest.fixture(scope="session")
def c31():
    return make_curve(31)


@pytest.fixture(scope="session")
def c101():
    return make_curve(101)


@pytest.fixture(scope="session")
def c1009():
    return make_curve(1009)


@pytest.fixture
def rng():
    return random.Random(12345)


def distinct_pair(curve, rng):
    while True:
        D1, D2 = random_typical(curve, rng), random_typical(curve, rng)
        if D1 != D2:
            return D1, D2


def distinct_pair_with_points(curve, rng):
    while True:
        (D1, P1), (D2, P2) = (random_typical_with_points(curve, rng) for _ in range(2))
        if D1 != D2 and not set(P1) & set(P2):
            return D1, P1, D2, P2


def typical_run(fn, *args, tries=50):
    """Call fn() with fresh inputs from args-less factory until no Atypical."""
    for _ in range(tries):
        try:
            return fn()
        except Atypical:
            continue
    raise AssertionError("always atypical")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
