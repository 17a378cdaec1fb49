"""Exact rational scalars.

``Rational`` is the standard library ``Fraction``: always reduced, with a
positive denominator, and never rounded.
"""

from fractions import Fraction
import re

from ..errors import NonRational

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer) into an exact rational.

    Decimal and float spellings are rejected on purpose: they are not exact.
    """
    if isinstance(text, bool):
        raise NonRational(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise NonRational(f"expected a string 'p/q', got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise NonRational(f"not a rational 'p/q' string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise NonRational(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_square(x) -> bool:
    return rational_sqrt(x) is not None


def rational_sqrt(x):
    """Exact square root of a non-negative rational, or None."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
