# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled truncated-series kernels.

Same contract as ``_pykernels``.  Inputs are lifted to integer numerators
over one common denominator, the recurrences run on Python integers with
C-level loop indices, and each output coefficient is reduced once.
"""

from fractions import Fraction
from math import lcm


cdef tuple _lift(a, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef object den = 1
    for i in range(n):
        den = lcm(den, a[i].denominator)
    nums = [a[i].numerator * (den // a[i].denominator) for i in range(n)]
    return nums, den


def mul(a, b, Py_ssize_t order):
    cdef Py_ssize_t k, i, n = order + 1
    cdef list A, B, out = []
    cdef object da, db, den, acc, ai
    A, da = _lift(a, n)
    B, db = _lift(b, n)
    den = da * db
    for k in range(n):
        acc = 0
        for i in range(k + 1):
            ai = A[i]
            if ai:
                acc += ai * B[k - i]
        out.append(Fraction(acc, den))
    return out


def recip(a, Py_ssize_t order):
    # 1/a = D * (1/A); coefficient k of 1/A is N_k / A_0^(k+1)
    cdef Py_ssize_t k, j, n = order + 1
    cdef list A, N, pw, out
    cdef object den, a0, acc
    A, den = _lift(a, n)
    a0 = A[0]
    if a0 == 0:
        raise ZeroDivisionError("constant term is zero")
    pw = [1]
    for k in range(n):
        pw.append(pw[k] * a0)
    N = [1]
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            if A[j]:
                acc += A[j] * N[k - j] * pw[j - 1]
        N.append(-acc)
    out = [Fraction(den * N[k], pw[k + 1]) for k in range(n)]
    return out


def exp(a, Py_ssize_t order):
    # b_k = N_k / (k! D^k),  N_k = sum_j j A_j D^(j-1) N_{k-j} (k-1)!/(k-j)!
    cdef Py_ssize_t k, j, n = order + 1
    cdef list A, N, pw, out
    cdef object den, acc, ff, fact
    A, den = _lift(a, n)
    if A[0] != 0:
        raise ValueError("constant term must be zero")
    pw = [1]
    for k in range(n):
        pw.append(pw[k] * den)
    N = [1]
    out = [Fraction(1)]
    fact = 1
    for k in range(1, n):
        acc = 0
        ff = 1
        for j in range(1, k + 1):
            if A[j]:
                acc += j * A[j] * pw[j - 1] * N[k - j] * ff
            ff *= k - j
        N.append(acc)
        fact *= k
        out.append(Fraction(acc, fact * pw[k]))
    return out


def log(b, Py_ssize_t order):
    # a_k = M_k / (k D^k),  M_k = k B_k D^(k-1) - sum_{j<k} M_j B_{k-j} D^(k-1-j)
    cdef Py_ssize_t k, j, n = order + 1
    cdef list B, M, pw, out
    cdef object den, acc
    B, den = _lift(b, n)
    if B[0] != den:
        raise ValueError("constant term must be one")
    pw = [1]
    for k in range(n):
        pw.append(pw[k] * den)
    M = [0]
    out = [Fraction(0)]
    for k in range(1, n):
        acc = k * B[k] * pw[k - 1]
        for j in range(1, k):
            if M[j]:
                acc -= M[j] * B[k - j] * pw[k - 1 - j]
        M.append(acc)
        out.append(Fraction(acc, k * pw[k]))
    return out
