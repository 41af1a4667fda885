import pytest

from src.core.errors import AmbientMismatchError, ParseError
from src.core.perset import (
    AmbientGroup,
    format_set,
    from_model,
    parse_element,
    parse_set,
    to_model,
)


def test_format_is_canonical():
    assert format_set(parse_set("{1}, 0+2N")) == "{0,1}, 2+2N"
    assert format_set(parse_set("0+1N")) == "0+1N"
    assert format_set(parse_set("-1-1N")) == "-1-1N"
    assert format_set(parse_set("0+2N, 0-2N")) == "0+2Z"
    assert format_set(parse_set("{}")) == "{}"


@pytest.mark.parametrize(
    "literal",
    [
        "{0,3,5,6}, 8+1N",
        "{-4, 7}, 10+3N, -9-2N",
        "1+4Z, {2}, 6+4N",
        "C=2; (0)0+1N, (1){3}",
        "C=2x4; (1,3)-2+5N, (0,1){0,-1}",
    ],
)
def test_roundtrip(literal):
    s = parse_set(literal)
    assert parse_set(format_set(s)) == s
    assert from_model(to_model(s)) == s


def test_model_uses_decimal_strings():
    model = to_model(parse_set("{1}, 0+2N"))
    data = model.model_dump(mode="json")
    assert data["period"] == "2"
    assert data["window"] == [["0"], ["1"]]
    assert data["right_pattern"] == [["0"]]
    assert data["literal"] == "{0,1}, 2+2N"


def test_ambient_header_and_expected_ambient():
    amb = AmbientGroup((2,))
    s = parse_set("(1)0+2N", amb)
    assert s.ambient == amb
    with pytest.raises(AmbientMismatchError):
        parse_set("C=3; {0}", amb)


@pytest.mark.parametrize(
    "literal, position",
    [
        ("", 0),
        ("{1,", 3),
        ("0+0N", 2),
        ("0+2Q", 3),
        ("{1} {2}", 4),
        ("(1){0}", 0),
    ],
)
def test_parse_errors_carry_position(literal, position):
    with pytest.raises(ParseError) as info:
        parse_set(literal)
    assert info.value.position == position


def test_bad_torsion_header():
    with pytest.raises(ParseError):
        parse_set("C=2x3; {0}")


def test_parse_element():
    amb = AmbientGroup((2,))
    assert parse_element("(3, -4)", amb) == (1, -4)
    assert parse_element("7", AmbientGroup()) == (7,)
    with pytest.raises(AmbientMismatchError):
        parse_element("7", amb)
