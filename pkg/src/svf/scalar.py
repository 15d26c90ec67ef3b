"""Exact rationals and their canonical text form.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator and zero as 0/1, so it serves as the scalar type directly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import ParseError, PoleError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]`` into a canonical Fraction.

    Unlike ``Fraction(str)`` this rejects decimals, exponents and
    surrounding whitespace, so parameter files have exactly one spelling
    per value up to canonicalization.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def add(x: Fraction, y: Fraction) -> Fraction:
    return Fraction(x) + Fraction(y)


def sub(x: Fraction, y: Fraction) -> Fraction:
    return Fraction(x) - Fraction(y)


def mul(x: Fraction, y: Fraction) -> Fraction:
    return Fraction(x) * Fraction(y)


def neg(x: Fraction) -> Fraction:
    return -Fraction(x)


def inv(x: Fraction) -> Fraction:
    if x == 0:
        raise PoleError("divisor", "inv")
    return 1 / Fraction(x)


def div(x: Fraction, y: Fraction, factor: str = "divisor") -> Fraction:
    """Exact quotient; a zero divisor raises PoleError naming ``factor``."""
    if y == 0:
        raise PoleError(factor)
    return Fraction(x) / Fraction(y)


def bits(x: Fraction) -> int:
    """Bit size of the larger of numerator and denominator."""
    x = Fraction(x)
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())
