import pytest

from src.core.perset import parse_set


@pytest.fixture
def naturals():
    return parse_set("0+1N")


@pytest.fixture
def numerical_3_5():
    return parse_set("{0,3,5,6}, 8+1N")
