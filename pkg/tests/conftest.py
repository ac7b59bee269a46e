import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tiltlab.kclass import KClass, from_chern
from tiltlab.lattice import S1, S2


@pytest.fixture
def s1():
    return S1


@pytest.fixture
def s2():
    return S2


@pytest.fixture
def rng():
    return random.Random(20240607)


def K1(ch0, c1, ch2):
    """Class on S1 with ch1 = c1 * H."""
    return KClass(Fraction(ch0), [Fraction(c1)], Fraction(ch2))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def divisors(rank):
    return st.lists(rationals, min_size=rank, max_size=rank)


def kclasses(rank):
    return st.builds(KClass, rationals, divisors(rank), rationals)


def integral_classes(s, min_rank=-5, max_rank=5):
    return st.builds(
        lambda r, c1, c2: from_chern(r, c1, c2, s),
        st.integers(min_rank, max_rank),
        st.lists(st.integers(-6, 6), min_size=s.rank, max_size=s.rank),
        st.integers(-10, 10),
    )


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
