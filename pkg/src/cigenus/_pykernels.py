"""Reference truncated-series kernels in pure Python.

Every kernel takes coefficient sequences of Fractions (index = power of z)
and a truncation order, and returns a new list of ``order + 1`` Fractions.
The compiled module ``_ckernels`` implements the same functions.
"""

from __future__ import annotations

from fractions import Fraction


def mul(a, b, order):
    out = []
    for k in range(order + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            ai = a[i]
            if ai:
                acc += ai * b[k - i]
        out.append(acc)
    return out


def recip(a, order):
    # caller guarantees a[0] != 0
    inv0 = 1 / Fraction(a[0])
    out = [inv0]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if a[j]:
                acc += a[j] * out[k - j]
        out.append(-acc * inv0)
    return out


def exp(a, order):
    # caller guarantees a[0] == 0; uses b' = a' b
    out = [Fraction(1)]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if a[j]:
                acc += j * a[j] * out[k - j]
        out.append(acc / k)
    return out


def log(b, order):
    # caller guarantees b[0] == 1; k a_k = k b_k - sum_{j<k} j a_j b_{k-j}
    out = [Fraction(0)]
    for k in range(1, order + 1):
        acc = k * Fraction(b[k])
        for j in range(1, k):
            if out[j]:
                acc -= j * out[j] * b[k - j]
        out.append(acc / k)
    return out
