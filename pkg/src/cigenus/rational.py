"""Exact rationals and the generalized binomial coefficient.

Rationals are plain :class:`fractions.Fraction` values, which are immutable
and always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Fraction", "binom", "parse_rational", "format_rational", "as_fraction"]

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def as_fraction(x) -> Fraction:
    """Coerce an int/Fraction (or rational text) to a Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?p(/q)?`` into a Fraction.

    >>> parse_rational("3/6")
    Fraction(1, 2)
    """
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"malformed rational: {text!r}")
    num, _, den = s.partition("/")
    q = int(den) if den else 1
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), q)


def format_rational(x) -> str:
    """Canonical lowest-terms text, e.g. ``"1/2"`` or ``"-4"``."""
    return str(as_fraction(x))


def binom(a, k: int) -> Fraction:
    """a(a-1)...(a-k+1)/k! for rational ``a`` and integer ``k >= 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = as_fraction(a)
    num = Fraction(1)
    den = 1
    for i in range(k):
        num *= a - i
        den *= i + 1
    return num / den
