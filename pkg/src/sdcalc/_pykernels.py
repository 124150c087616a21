"""Pure-Python exact kernels.

Same algorithms as ``_ckernels.pyx``. Rationals are carried as separate
numerator/denominator integer lists inside the loops; ``Fraction`` objects
only appear at the boundary.
"""
from fractions import Fraction
from math import gcd


def _split(xs, length):
    # pad with zeros / drop extra terms so every index below length is valid
    xs = list(xs)[:length]
    xs += [0] * (length - len(xs))
    nums = []
    dens = []
    for x in xs:
        x = Fraction(x)
        nums.append(x.numerator)
        dens.append(x.denominator)
    return nums, dens


def series_mul(a, b, order):
    """Cauchy product of two coefficient lists, truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    an, ad = _split(a, order + 1)
    bn, bd = _split(b, order + 1)
    out = []
    for n in range(order + 1):
        sn, sd = 0, 1
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


def series_inverse(a, order):
    """Reciprocal of a power series with nonzero constant term."""
    if order < 0:
        raise ValueError("order must be >= 0")
    an, ad = _split(a, order + 1)
    if an[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    # 1/a0, sign kept on the numerator
    b0n, b0d = (ad[0], an[0]) if an[0] > 0 else (-ad[0], -an[0])
    bn = [b0n]
    bd = [b0d]
    for n in range(1, order + 1):
        sn, sd = 0, 1
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
    return [Fraction(p, q) for p, q in zip(bn, bd)]


def composition_sum(dens, n):
    """Sum of (-1)**i / (dens[k1] * ... * dens[ki]) over compositions of n.

    ``dens`` is indexed by part size; ``dens[0]`` is ignored. Every
    composition is visited explicitly (2**(n-1) of them). The empty
    composition of 0 contributes 1.
    """
    if n < 0 or len(dens) < n + 1:
        raise ValueError("need n >= 0 and len(dens) > n")
    sn, sd = 0, 1
    stack = [(n, 1, 1)]
    while stack:
        rem, prod, sign = stack.pop()
        if rem == 0:
            g = gcd(prod, sd)
            sn = sn * (prod // g) + sign * (sd // g)
            sd = sd // g * prod
            continue
        for k in range(1, rem + 1):
            stack.append((rem - k, prod * dens[k], -sign))
    return Fraction(sn, sd)
