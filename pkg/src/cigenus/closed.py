"""Closed binomial-sum formulas for A-hat, alpha, Todd, Euler and A_k.

Most formulas share the shape

    sum_{J subset of degrees} (-1)^{r-|J|} binom(a + sum_{j in J} d_j, n + r)

for a rational offset ``a``; :func:`signed_subset_binomial_sum` evaluates it
by enumerating bit masks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .rational import binom
from .space import Space


class NotSpinError(ValueError):
    pass


class OddDimensionError(ValueError):
    pass


def subset_sums(degrees) -> Iterator[tuple[int, int]]:
    """Yield (size, sum) for every subset of ``degrees`` (by bit mask)."""
    r = len(degrees)
    for mask in range(1 << r):
        size = 0
        total = 0
        for i in range(r):
            if mask >> i & 1:
                size += 1
                total += degrees[i]
        yield size, total


def signed_subset_binomial_sum(offset, degrees, k: int) -> Fraction:
    r = len(degrees)
    acc = Fraction(0)
    for j, s in subset_sums(degrees):
        term = binom(offset + s, k)
        acc += term if (r - j) % 2 == 0 else -term
    return acc


def ahat_closed(sp: Space) -> Fraction:
    """A-hat genus of an even-dimensional complete intersection; 0 for odd n."""
    if sp.n % 2:
        return Fraction(0)
    return signed_subset_binomial_sum(Fraction(sp.c1, 2) - 1, sp.degrees, sp.n + sp.r)


def ahat_hypersurface(n_half: int, d: int) -> Fraction:
    """A-hat of the hypersurface X_{2 n_half}(d) as a product over j = -n_half..n_half."""
    if n_half < 0 or d < 1:
        raise ValueError("need n_half >= 0 and d >= 1")
    half = Fraction(d, 2)
    prod = Fraction(1)
    for j in range(-n_half, n_half + 1):
        prod *= half - j
    return 2 * prod / math.factorial(2 * n_half + 1)


def ahat_iterated(sp: Space) -> Fraction:
    """A-hat by repeatedly merging the two smallest degrees.

    Each step replaces (.., a, b) with a >= b >= 2 by the sum over
    k < b of the spaces (.., a + b - 1 - 2k); degree-1 entries are dropped,
    and single hypersurfaces use the product formula.
    """
    if sp.n % 2:
        raise OddDimensionError(f"{sp} has odd complex dimension")
    return _ahat_iter(sp.n // 2, tuple(sorted(sp.degrees, reverse=True)))


@lru_cache(maxsize=None)
def _ahat_iter(n_half: int, degrees: tuple[int, ...]) -> Fraction:
    degrees = tuple(d for d in degrees if d != 1)
    if len(degrees) <= 1:
        return ahat_hypersurface(n_half, degrees[0] if degrees else 1)
    *rest, a, b = degrees
    total = Fraction(0)
    for k in range(b):
        merged = tuple(sorted((*rest, a + b - 1 - 2 * k), reverse=True))
        total += _ahat_iter(n_half, merged)
    return total


class SignClass(enum.Enum):
    ZERO = "zero"
    POSITIVE = "positive"


def ahat_sign_class(sp: Space) -> SignClass:
    """Predicted sign of A-hat for an even-dimensional spin complete intersection."""
    if sp.n % 2:
        raise OddDimensionError(f"{sp} has odd complex dimension")
    if not sp.spin:
        raise NotSpinError(f"{sp} is not spin (c1 = {sp.c1})")
    return SignClass.ZERO if sp.c1 > 0 else SignClass.POSITIVE


@dataclass(frozen=True)
class AlphaValue:
    """alpha-invariant: an integer, a class mod 2, or zero (trivial group)."""

    kind: str  # "integer" | "mod2" | "zero"
    value: Fraction

    def __str__(self):
        return str(self.value)


def alpha_mod2_sum(sp: Space, excluded: int | None = None) -> int:
    """Mod-2 alpha sum for n = 1 (mod 4), leaving out degree ``excluded`` (default: last)."""
    degrees = list(sp.degrees)
    if degrees:
        degrees.pop(len(degrees) - 1 if excluded is None else excluded)
    offset = Fraction(sp.c1, 2) - 1
    acc = Fraction(0)
    for _, s in subset_sums(degrees):
        acc += binom(offset + s, sp.n + sp.r)
    if acc.denominator != 1:
        raise AssertionError(f"non-integral alpha sum {acc} for {sp}")
    return int(acc) % 2


def alpha_invariant(sp: Space) -> AlphaValue:
    if not sp.spin:
        raise NotSpinError(f"{sp} is not spin (c1 = {sp.c1})")
    m = sp.n % 4
    if m == 0:
        return AlphaValue("integer", ahat_closed(sp))
    if m == 2:
        return AlphaValue("integer", ahat_closed(sp) / 2)
    if m == 1:
        return AlphaValue("mod2", Fraction(alpha_mod2_sum(sp)))
    return AlphaValue("zero", Fraction(0))


def todd_t1(sp: Space) -> Fraction:
    acc = Fraction(0)
    nr = sp.n + sp.r
    for j, s in subset_sums(sp.degrees):
        term = binom(s - 1, nr)
        acc += term if (nr + j) % 2 == 0 else -term
    return acc


def todd_t2(sp: Space) -> Fraction:
    return signed_subset_binomial_sum(sp.c1 - 1, sp.degrees, sp.n + sp.r)


def complete_homogeneous(n: int, values) -> int:
    """h_n(values) = [z^n] prod 1/(1 - a z), by multiplying in one geometric factor at a time."""
    h = [1] + [0] * n
    for a in values:
        for m in range(1, n + 1):
            h[m] += a * h[m - 1]
    return h[n]


def euler_closed(sp: Space) -> Fraction:
    vals = [1, 1] + [1 - d for d in sp.degrees]
    return Fraction(sp.total_degree * complete_homogeneous(sp.n, vals))


def ak_closed(sp: Space, k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be a positive integer")
    return k**sp.n * signed_subset_binomial_sum(Fraction(sp.c1, k) - 1, sp.degrees, sp.n + sp.r)
