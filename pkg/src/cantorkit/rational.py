"""Exact rational scalars.

Every endpoint, length and mass in this package is a :class:`fractions.Fraction`.
``Fraction`` already stores values reduced with a positive denominator and a
unique zero (0/1), so this module only adds construction, parsing and the
text renderings used by reports.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


def make(n: int, d: int = 1) -> Fraction:
    """Return the reduced fraction ``n/d``; raises ZeroDivisionError when d == 0."""
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {n}/{d}")
    return Fraction(int(n), int(d))


def parse(text: str) -> Fraction:
    """Parse ``"num/den"`` or an integer literal. Decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    return make(int(num), int(den) if den is not None else 1)


def fmt(r: Fraction) -> str:
    """Canonical ``num/den`` text; integers print without a denominator."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def to_decimal(r: Fraction, digits: int = 6) -> str:
    """One-way decimal rendering rounded to ``digits`` places (for reports only)."""
    r = Fraction(r)
    with localcontext() as ctx:
        ctx.prec = max(28, digits + len(str(abs(r.numerator) // r.denominator)) + 5)
        value = Decimal(r.numerator) / Decimal(r.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits)))


def r_numeric(r: Fraction) -> str:
    """Render a rational the way R prints a double: exact when the decimal
    terminates, else 15 significant digits."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    den = r.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    if den == 1:
        with localcontext() as ctx:
            ctx.prec = 200
            text = format(Decimal(r.numerator) / Decimal(r.denominator), "f")
        return text.rstrip("0").rstrip(".") if "." in text else text
    return format(float(r), ".15g")


def paper_endpoint(value: Fraction, q: int, n: int) -> str:
    """Endpoint text in the un-reduced ``x/q^n`` layout of the reference tables.

    The value is scaled by ``q^(n+1)``, rounded to an integer, then one factor
    of ``q`` is divided back out of the numerator only, so the numerator may be
    fractional (``2.5/16``).
    """
    denom = q ** (n + 1)
    num = round(Fraction(value) * denom)
    return f"{r_numeric(Fraction(num, q))}/{denom // q}"
