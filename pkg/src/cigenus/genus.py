"""Catalog of genera, each represented by its S-series.

A genus with characteristic series ``Q(x) = x / R(x)`` is stored through
``S(z) = R(z) / z``, which has constant term 1.  ``Q = 1/S``.

Custom genus files are line oriented::

    # comment
    name: my-genus
    -1/2        # q_1
    1/12        # q_2

giving ``Q(x) = 1 + q_1 x + q_2 x^2 + ...``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable

from .rational import as_fraction, parse_rational
from .series import Series

BUILTIN_KINDS = ("todd", "ahat", "signature", "euler", "ty", "ak")


class GenusFileError(ValueError):
    pass


@dataclass(frozen=True)
class Genus:
    kind: str
    y: Fraction | None = None
    k: int | None = None
    name: str | None = None
    q: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.kind not in BUILTIN_KINDS + ("custom",):
            raise ValueError(f"unknown genus kind {self.kind!r}")
        if self.kind == "ty":
            if self.y is None:
                raise ValueError("the T_y genus needs a value for y")
            y = as_fraction(self.y)
            if y == -1:
                # T_{-1} is the Euler characteristic (R(-1; x) = x / (1 + x))
                object.__setattr__(self, "kind", "euler")
                y = None
            object.__setattr__(self, "y", y)
        if self.kind == "ak":
            if self.k is None or int(self.k) != self.k or self.k < 1:
                raise ValueError(f"A_k needs a positive integer k, got {self.k!r}")
            object.__setattr__(self, "k", int(self.k))
        if self.kind == "custom":
            if not self.name:
                raise ValueError("custom genus needs a name")
            object.__setattr__(self, "q", tuple(as_fraction(c) for c in self.q))

    @classmethod
    def todd(cls):
        return cls("todd")

    @classmethod
    def ahat(cls):
        return cls("ahat")

    @classmethod
    def signature(cls):
        return cls("signature")

    @classmethod
    def euler(cls):
        return cls("euler")

    @classmethod
    def ty(cls, y):
        return cls("ty", y=as_fraction(y))

    @classmethod
    def ak(cls, k: int):
        return cls("ak", k=k)

    @classmethod
    def custom(cls, name: str, q) -> Genus:
        return cls("custom", name=name, q=tuple(q))

    @property
    def label(self) -> str:
        if self.kind == "ty":
            return f"ty({self.y})"
        if self.kind == "ak":
            return f"ak({self.k})"
        if self.kind == "custom":
            return f"custom({self.name})"
        return self.kind

    @property
    def params(self) -> dict:
        if self.kind == "ty":
            return {"y": str(self.y)}
        if self.kind == "ak":
            return {"k": self.k}
        if self.kind == "custom":
            return {"name": self.name, "q": [str(c) for c in self.q]}
        return {}

    def s_series(self, order: int) -> Series:
        return s_series(self, order)

    def q_series(self, order: int) -> Series:
        return s_series(self, order).recip()


# test-only hook: callable (genus, series) -> series applied to every catalog result
_fault: Callable[[Genus, Series], Series] | None = None


def s_series(g: Genus, order: int) -> Series:
    """S(z) = R(z)/z of ``g``, exact through ``z**order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    s = _s_series(g, order)
    if _fault is not None:
        s = _fault(g, s)
    return s


def _exp_linear(c, order: int) -> list[Fraction]:
    """Coefficients of exp(c z)."""
    c = Fraction(c)
    return [c**i / math.factorial(i) for i in range(order + 1)]


@lru_cache(maxsize=512)
def _s_series(g: Genus, order: int) -> Series:
    kind = g.kind
    if kind == "todd":
        # (1 - e^{-z}) / z
        return Series([Fraction((-1) ** i, math.factorial(i + 1)) for i in range(order + 1)])
    if kind == "ahat":
        # 2 sinh(z/2) / z
        return Series(
            [Fraction(1, 4 ** (i // 2) * math.factorial(i + 1)) if i % 2 == 0 else 0 for i in range(order + 1)]
        )
    if kind == "signature":
        # tanh(z) / z = (sinh(z)/z) / cosh(z)
        sinh_over_z = Series([Fraction(1, math.factorial(i + 1)) if i % 2 == 0 else 0 for i in range(order + 1)])
        cosh = Series([Fraction(1, math.factorial(i)) if i % 2 == 0 else 0 for i in range(order + 1)])
        return sinh_over_z * cosh.recip()
    if kind == "euler":
        return Series([(-1) ** i for i in range(order + 1)])
    if kind == "ty":
        # (e^{uz} - 1) / (z (e^{uz} + y)),  u = y + 1
        y = g.y
        u = y + 1
        e = _exp_linear(u, order + 1)
        num = Series(e[1:])
        den = Series([e[0] + y] + e[1 : order + 1])
        return num * den.recip()
    if kind == "ak":
        # (e^{kz} - 1) / (k z e^z)
        e = _exp_linear(g.k, order + 1)
        num = Series([c / g.k for c in e[1:]])
        return num * Series(_exp_linear(-1, order))
    if kind == "custom":
        if g.q and len(g.q) < order:
            raise ValueError(
                f"custom genus {g.name!r} supplies q_1..q_{len(g.q)}, but order {order} was requested"
            )
        # an empty list means Q = 1 exactly
        return Series([1, *g.q[:order]], order).recip()
    raise AssertionError(kind)


def parse_genus_text(text: str) -> Genus:
    name = None
    coeffs: list[Fraction] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if name is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "name" or not value.strip():
                raise GenusFileError(f"line {lineno}: expected 'name: <string>', got {raw.strip()!r}")
            name = value.strip()
            continue
        try:
            coeffs.append(parse_rational(line))
        except ValueError as exc:
            raise GenusFileError(f"line {lineno}: {exc}") from None
    if name is None:
        raise GenusFileError("missing 'name:' line")
    return Genus.custom(name, coeffs)


def genus_from_file(path) -> Genus:
    return parse_genus_text(Path(path).read_text())


def genus_from_name(name: str, y=None, k=None, custom_file=None) -> Genus:
    """Build a genus from CLI-style arguments."""
    name = name.lower()
    if name in ("todd", "ahat", "signature", "euler"):
        return Genus(name)
    if name == "ty":
        if y is None:
            raise ValueError("genus 'ty' requires --y")
        return Genus.ty(y)
    if name == "ak":
        if k is None:
            raise ValueError("genus 'ak' requires --k")
        return Genus.ak(k)
    if name == "custom":
        if custom_file is None:
            raise ValueError("genus 'custom' requires --custom FILE")
        return genus_from_file(custom_file)
    raise ValueError(f"unknown genus {name!r}")
