"""Rendering of exact distances as fraction strings and rounded decimals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

DEFAULT_PRECISION = 3


def fraction_str(value: Rational) -> str:
    """``3/4`` for proper fractions, ``2`` for integers."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse an integer or ``p/q`` token. Decimal notation is rejected."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an integer or fraction: {text!r}") from None


def format_decimal(value: Rational, precision: int = DEFAULT_PRECISION) -> str:
    """Round half away from zero to ``precision`` places using exact arithmetic.

    >>> format_decimal(Fraction(1, 73))
    '0.014'
    >>> format_decimal(Fraction(367, 146))
    '2.514'
    """
    if precision < 0:
        raise ValueError("precision must be non-negative")
    q = Fraction(value)
    sign = "-" if q < 0 else ""
    scaled = abs(q) * 10**precision
    units = int(scaled + Fraction(1, 2))  # floor(x + 1/2) is half-up for x >= 0
    if precision == 0:
        return f"{sign}{units}"
    whole, frac = divmod(units, 10**precision)
    return f"{sign}{whole}.{frac:0{precision}d}"


def describe(value: Rational, precision: int = DEFAULT_PRECISION) -> str:
    """``"3/4 (0.750)"`` for non-integers, plain ``"2"`` for integers."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{fraction_str(q)} ({format_decimal(q, precision)})"
