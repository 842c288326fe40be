"""Complete intersections X_n(d_1, ..., d_r) in CP^{n+r}."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Space:
    """Complex dimension ``n`` and multi-degree ``degrees`` (kept in input order)."""

    n: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"dimension must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be positive, got {self.degrees}")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return math.prod(self.degrees)

    @property
    def c1(self) -> int:
        """First Chern class as a multiple of the hyperplane class."""
        return self.n + self.r + 1 - sum(self.degrees)

    @property
    def spin(self) -> bool:
        return self.c1 % 2 == 0

    def with_degrees(self, degrees) -> Space:
        return Space(self.n, tuple(degrees))

    def __str__(self):
        return f"X_{self.n}({','.join(map(str, self.degrees))})"


def c1_of(sp: Space) -> int:
    return sp.c1


def is_spin(sp: Space) -> bool:
    return sp.spin
