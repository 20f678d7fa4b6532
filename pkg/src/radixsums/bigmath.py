"""Exact arithmetic primitives: floor, ceiling, fractional part, sawtooth,
integer logarithm, and rational parsing/formatting.

All functions operate on Python ints and `fractions.Fraction`, both of which
are arbitrary precision, so every result here is exact. No floating point
anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "floor",
    "ceiling",
    "frac",
    "sawtooth",
    "ilog",
    "ipow",
    "parse_rational",
    "format_rational",
    "ONE_HALF",
]

ONE_HALF = Fraction(1, 2)

# "p/q" with q > 0, or a terminating decimal. Sign only on the numerator.
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+|\.\d+)?$")


def floor(q: Fraction | int) -> int:
    """Greatest integer <= q."""
    q = Fraction(q)
    return q.numerator // q.denominator


def ceiling(q: Fraction | int) -> int:
    """Least integer >= q."""
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def frac(q: Fraction | int) -> Fraction:
    """Fractional part q - floor(q), always in [0, 1)."""
    q = Fraction(q)
    return q - floor(q)


def sawtooth(q: Fraction | int) -> Fraction:
    """0 for integer q, otherwise frac(q) - 1/2; lies in (-1/2, 1/2)."""
    q = Fraction(q)
    if q.denominator == 1:
        return Fraction(0)
    return frac(q) - ONE_HALF


def ipow(b: int, k: int) -> int:
    """Exact b**k for nonnegative integer k."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return b**k


def ilog(b: int, q: Fraction | int) -> int:
    """Largest K with b**K <= q, for b >= 2 and q >= 1.

    Computed by exact comparison against successive powers of b; never via
    floating-point logarithms, so it is correct at any magnitude.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    q = Fraction(q)
    if q < 1:
        raise ValueError(f"ilog requires q >= 1, got {q}")
    k = 0
    power = b  # b ** (k + 1)
    while power <= q:
        k += 1
        power *= b
    return k


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (q > 0) or a terminating decimal like "7.5" exactly.

    Anything else (including a signed or zero denominator) is a ValueError.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def format_rational(q: Fraction | int) -> str:
    """Canonical rendering: "p/q", or plain "p" when the value is an integer."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
