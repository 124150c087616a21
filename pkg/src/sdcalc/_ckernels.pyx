"""Compiled exact kernels; see ``_pykernels`` for the reference versions.

Values stay Python integers (arbitrary precision); the gain comes from
C-level loop control and from skipping ``Fraction`` operator dispatch.
"""
from fractions import Fraction
from math import gcd


cdef tuple _split(xs, Py_ssize_t length):
    # loops below run without bounds checks; pad or cut to exactly length
    cdef list items = list(xs)[:length]
    items.extend([0] * (length - len(items)))
    cdef list nums = []
    cdef list dens = []
    for x in items:
        x = Fraction(x)
        nums.append(x.numerator)
        dens.append(x.denominator)
    return nums, dens


def series_mul(a, b, Py_ssize_t order):
    cdef list an, ad, bn, bd, out
    cdef Py_ssize_t n, k
    cdef object sn, sd, p, q, g
    if order < 0:
        raise ValueError("order must be >= 0")
    an, ad = _split(a, order + 1)
    bn, bd = _split(b, order + 1)
    out = []
    for n in range(order + 1):
        sn = 0
        sd = 1
        for k in range(n + 1):
            p = an[k] * bn[n - k]
            if not p:
                continue
            q = ad[k] * bd[n - k]
            g = gcd(q, sd)
            sn = sn * (q // g) + p * (sd // g)
            sd = sd // g * q
        out.append(Fraction(sn, sd))
    return out


def series_inverse(a, Py_ssize_t order):
    cdef list an, ad, bn, bd
    cdef Py_ssize_t n, k
    cdef object sn, sd, p, q, g, num, den, b0n, b0d
    if order < 0:
        raise ValueError("order must be >= 0")
    an, ad = _split(a, order + 1)
    if an[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    if an[0] > 0:
        b0n = ad[0]
        b0d = an[0]
    else:
        b0n = -ad[0]
        b0d = -an[0]
    bn = [b0n]
    bd = [b0d]
    for n in range(1, order + 1):
        sn = 0
        sd = 1
        for k in range(1, n + 1):
            p = an[k] * bn[n - k]
            if not p:
                continue
            q = ad[k] * bd[n - k]
            g = gcd(q, sd)
            sn = sn * (q // g) + p * (sd // g)
            sd = sd // g * q
        num = -sn * b0n
        den = sd * b0d
        g = gcd(num, den)
        bn.append(num // g)
        bd.append(den // g)
    return [Fraction(bn[k], bd[k]) for k in range(order + 1)]


def composition_sum(dens, Py_ssize_t n):
    cdef list d = list(dens)
    if n < 0 or len(d) < n + 1:
        raise ValueError("need n >= 0 and len(dens) > n")
    cdef list rems = [n]
    cdef list prods = [1]
    cdef list signs = [1]
    cdef Py_ssize_t rem, k
    cdef int sign
    cdef object sn = 0, sd = 1, prod, g
    while rems:
        rem = rems.pop()
        prod = prods.pop()
        sign = signs.pop()
        if rem == 0:
            g = gcd(prod, sd)
            if sign > 0:
                sn = sn * (prod // g) + sd // g
            else:
                sn = sn * (prod // g) - sd // g
            sd = sd // g * prod
            continue
        for k in range(1, rem + 1):
            rems.append(rem - k)
            prods.append(prod * d[k])
            signs.append(-sign)
    return Fraction(sn, sd)
