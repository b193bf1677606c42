"""Rendering and serialization of exact values."""

from __future__ import annotations

import csv
import io
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .linalg import RatMatrix


def fraction_str(x: Fraction) -> str:
    """Serialize as "p/q", omitting the denominator when it is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def sig_digits(x: Fraction, digits: int) -> str:
    """Decimal rendering at the given significant digits, round half-to-even."""
    if digits < 1:
        raise ValueError("digits must be positive")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d.normalize() if d == d.to_integral_value() else d)


def matrix_to_strings(m: RatMatrix) -> list[list[str]]:
    return [[fraction_str(x) for x in row] for row in m.data]


def matrix_to_csv(m: RatMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(matrix_to_strings(m))
    return buf.getvalue()


def matrix_to_text(m: RatMatrix, digits: int | None = None) -> str:
    """Aligned plain-text matrix; exact fractions unless digits is given."""
    if digits is None:
        cells = matrix_to_strings(m)
    else:
        cells = [[sig_digits(x, digits) for x in row] for row in m.data]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)
