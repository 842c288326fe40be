"""Genus values straight from the Chern classes.

The total Chern class of X_n(d) is (1+x)^{n+r+1} / prod(1 + d_i x).  With
formal roots x_1..x_n, the genus is the top-degree part of prod Q(x_i),
integrated using int x^n = d.  The roots are never formed: their power sums
come from Newton's identities, and

    prod Q(x_i) = exp( sum_m l_m p_m x^m ),   log Q(x) = sum_m l_m x^m.
"""

from __future__ import annotations

from fractions import Fraction

from .genus import Genus, s_series
from .series import Series
from .space import Space


def total_chern_series(sp: Space) -> Series:
    """Total Chern class as a series in the hyperplane class, through x^n."""
    n = sp.n
    c = Series([1, 1], n).powi(n + sp.r + 1)
    for d in sp.degrees:
        c = c * Series([1, d], n).recip()
    return c


def power_sums(e, m: int) -> list:
    """p_0..p_m from elementary symmetric values e[0..] (e[0] = 1).

    Uses p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k, with e_j
    taken as 0 beyond the supplied list.  ``p_0`` is returned as 0 (unused).
    """

    def el(j):
        return e[j] if j < len(e) else 0

    p = [0] * (m + 1)
    for k in range(1, m + 1):
        acc = (-1) ** (k - 1) * k * el(k)
        for i in range(1, k):
            acc += (-1) ** (i - 1) * el(i) * p[k - i]
        p[k] = acc
    return p


def genus_value_oracle(sp: Space, g: Genus) -> Fraction:
    n = sp.n
    chern = total_chern_series(sp)
    p = power_sums(chern.coefficients, n)
    log_q = s_series(g, n).recip().log()
    log_total = Series([0] + [log_q.coeff(m) * p[m] for m in range(1, n + 1)], n)
    return sp.total_degree * log_total.exp().coeff(n)
