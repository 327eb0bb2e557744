import pytest

from repfinite.fields import GF, QQ
from repfinite.poly import Ring, Variable


def small_ring(field, names=("x", "y", "z")):
    return Ring(field, tuple(Variable(n, gen=1, row=1, col=i + 1)
                             for i, n in enumerate(names)))


@pytest.fixture
def ring_q():
    return small_ring(QQ)


@pytest.fixture
def ring_f5():
    return small_ring(GF(5))


@pytest.fixture
def ring_f2():
    return small_ring(GF(2))
