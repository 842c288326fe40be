"""Genus of a complete intersection by residue (coefficient) extraction.

    phi(X_n(d)) = res_{z=0} prod_i R(d_i z) / R(z)^{n+r+1}
                = d * [z^n] prod_i S(d_i z) / S(z)^{n+r+1}

where S = R/z and d is the total degree; the z^r / z^{n+r+1} factor is
cancelled symbolically, so every series is only needed through z^n.
"""

from __future__ import annotations

from fractions import Fraction

from .genus import Genus, s_series
from .series import Series
from .space import Space


def genus_value(sp: Space, g: Genus) -> Fraction:
    n = sp.n
    s = s_series(g, n)
    integrand = s.recip().powi(n + sp.r + 1)
    for d in sp.degrees:
        integrand = integrand * s.subst_scale(d)
    return sp.total_degree * integrand.coeff(n)


def integrand_series(sp: Space, g: Genus, order: int) -> Series:
    """prod_i S(d_i z) / S(z)^{n+r+1} through ``z**order`` (for inspection)."""
    s = s_series(g, order)
    out = s.recip().powi(sp.n + sp.r + 1)
    for d in sp.degrees:
        out = out * s.subst_scale(d)
    return out
