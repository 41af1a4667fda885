import pytest

from src.core.perset import parse_set
from src.core.structure import validate_semigroup


def carrier(literal):
    return validate_semigroup(parse_set(literal))


@pytest.fixture
def nat():
    return carrier("0+1N")


@pytest.fixture
def integers():
    return carrier("0+1Z")


@pytest.fixture
def c2_nat():
    return carrier("C=2; (0)0+1N, (1)0+1N")


@pytest.fixture
def numerical_3_5():
    return carrier("{0,3,5,6}, 8+1N")


@pytest.fixture
def nonpositive():
    return carrier("0-1N")
