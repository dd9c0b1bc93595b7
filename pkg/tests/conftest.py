from fractions import Fraction

import pytest
from hypothesis import strategies as st

from wbc.ring import Matrix, RingSpec

Q = RingSpec.rationals()
GF2 = RingSpec.prime_field(2)
GF3 = RingSpec.prime_field(3)
GF5 = RingSpec.prime_field(5)
Z4 = RingSpec.modular(4)
Z6 = RingSpec.modular(6)

RINGS = [Q, GF2, GF3, GF5, Z4, Z6]


def M(ring, rows):
    return Matrix(ring, rows)


def scalars(ring):
    if ring.is_finite:
        return st.integers(0, ring.modulus - 1)
    return st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def matrices(ring, k=2):
    return st.lists(scalars(ring), min_size=k * k, max_size=k * k).map(
        lambda xs: Matrix.from_flat(ring, k, xs))


@pytest.fixture(params=RINGS, ids=lambda r: r.label)
def ring(request):
    return request.param


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
