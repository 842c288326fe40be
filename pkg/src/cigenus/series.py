"""Truncated univariate power series over the rationals.

A :class:`Series` knows its truncation order explicitly: it holds the
coefficients of ``z**0 .. z**order``.  Binary operations truncate to the
smaller of the two orders, so asking for a coefficient past what was
actually computed raises :class:`TruncationError` instead of returning 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import kernels
from .rational import as_fraction

__all__ = ["Series", "TruncationError", "ConstantTermError"]


class TruncationError(IndexError):
    """A coefficient beyond the truncation order was requested."""


class ConstantTermError(ValueError):
    """An operation's constant-term precondition was violated."""


class Series:
    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = (), order: int | None = None):
        coeffs = [as_fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("a series needs order >= 0 (or at least one coefficient)")
        if len(coeffs) <= order:
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._c = tuple(coeffs[: order + 1])

    @classmethod
    def _raw(cls, coeffs) -> Series:
        s = cls.__new__(cls)
        s._c = tuple(coeffs)
        return s

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("negative exponent")
        if k > self.order:
            raise TruncationError(f"coefficient z^{k} requested from a series of order {self.order}")
        return self._c[k]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return Series._raw(self._c[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._c)
        return f"Series([{terms}], order={self.order})"

    def __len__(self):
        return len(self._c)

    # ring operations

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        return Series([as_fraction(other)], self.order)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, other.order)
        return Series._raw(self._c[i] + other._c[i] for i in range(n + 1))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(-c for c in self._c)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series._raw(kernels.mul(self._c, other._c, n))
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.recip()
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.scale(1 / c)

    def __pow__(self, e: int):
        return self.powi(e)

    def scale(self, c) -> Series:
        c = as_fraction(c)
        return Series._raw(c * x for x in self._c)

    def subst_scale(self, c) -> Series:
        """The series of ``f(c*z)``: coefficient i is multiplied by c**i."""
        c = as_fraction(c)
        out = []
        p = Fraction(1)
        for x in self._c:
            out.append(x * p)
            p *= c
        return Series._raw(out)

    def recip(self) -> Series:
        if self._c[0] == 0:
            raise ConstantTermError("reciprocal of a series with zero constant term")
        return Series._raw(kernels.recip(self._c, self.order))

    def powi(self, e: int) -> Series:
        if e < 0:
            return self.recip().powi(-e)
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exp(self) -> Series:
        if self._c[0] != 0:
            raise ConstantTermError("exp needs a zero constant term")
        return Series._raw(kernels.exp(self._c, self.order))

    def log(self) -> Series:
        if self._c[0] != 1:
            raise ConstantTermError("log needs constant term 1")
        return Series._raw(kernels.log(self._c, self.order))
