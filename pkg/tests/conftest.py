import pytest

from bcinv.rings import TableRing, parse_ring

# GF(4) = {0, 1, x, x+1} with x^2 = x + 1; star is the Frobenius map t -> t^2,
# which is an involution here since squaring twice is the identity on GF(4)
GF4_ADD = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
GF4_STAR = [0, 1, 3, 2]


@pytest.fixture(scope="session")
def z6():
    return parse_ring("zn:6")


@pytest.fixture(scope="session")
def z4():
    return parse_ring("zn:4")


@pytest.fixture(scope="session")
def mq2():
    return parse_ring("mat:q:2")


@pytest.fixture(scope="session")
def m2z2():
    return parse_ring("mat:zp:2:2")


@pytest.fixture(scope="session")
def gf4():
    return TableRing(GF4_ADD, GF4_MUL, 0, 1, GF4_STAR, spec="table:gf4")
