from itertools import combinations

import pytest

from rootbounds import MultiplicityTable, Rank2Cartan


@pytest.fixture(scope="session")
def cartan3():
    return Rank2Cartan(3)


@pytest.fixture(scope="session")
def cartan4():
    return Rank2Cartan(4)


@pytest.fixture(scope="session")
def table3(cartan3):
    """Shared multiplicity table for r=3; grows as tests ask for bigger boxes."""
    return MultiplicityTable(cartan3)


@pytest.fixture(scope="session")
def table4(cartan4):
    return MultiplicityTable(cartan4)


def all_words(n_zeros: int, n_ones: int):
    """Every binary word with the given letter counts, as int lists."""
    total = n_zeros + n_ones
    for ones in combinations(range(total), n_ones):
        word = [0] * total
        for i in ones:
            word[i] = 1
        yield word
