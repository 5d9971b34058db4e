from fractions import Fraction

import pytest

from collabdist.formatting import describe, format_decimal, fraction_str, parse_fraction


@pytest.mark.parametrize(
    "value, precision, expected",
    [
        (Fraction(1, 73), 3, "0.014"),
        (Fraction(367, 146), 3, "2.514"),
        (Fraction(513, 146), 3, "3.514"),
        (Fraction(3, 4), 3, "0.750"),
        (Fraction(1, 8), 2, "0.13"),  # 0.125 rounds half up
        (Fraction(5, 2), 0, "3"),
        (Fraction(0), 3, "0.000"),
        (Fraction(2), 1, "2.0"),
        (Fraction(-1, 8), 2, "-0.13"),
    ],
)
def test_format_decimal(value, precision, expected):
    assert format_decimal(value, precision) == expected


def test_fraction_str_and_describe():
    assert fraction_str(Fraction(6, 8)) == "3/4"
    assert fraction_str(4) == "4"
    assert describe(Fraction(1, 73)) == "1/73 (0.014)"
    assert describe(2) == "2"


@pytest.mark.parametrize("text, value", [("3", 3), ("5/2", Fraction(5, 2)), (" 2/4 ", Fraction(1, 2))])
def test_parse_fraction(text, value):
    assert parse_fraction(text) == value


@pytest.mark.parametrize("text", ["2.5", "1/0", "a", ""])
def test_parse_fraction_rejects(text):
    with pytest.raises(ValueError):
        parse_fraction(text)
