"""Truncated formal power series in t over the rationals.

Coefficients are stored plainly (c_n is the coefficient of t**n); any
simplitorial normalisation is applied by the caller when extracting
numbers from a generating function.
"""
from fractions import Fraction
from math import factorial, prod

from sdcalc import kernels
from sdcalc.combinatorics import _check_d, _check_index, rising_factorial, sd_factorial, sd_pochhammer
from sdcalc.errors import ConsistencyError, DomainError
from sdcalc.polynomials import Polynomial


class TruncatedSeries:
    """Coefficients c_0..c_N of a power series; terms above t**N are dropped."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("truncation order must be >= 0")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def coefficient(self, n):
        if not 0 <= n <= self.order:
            raise DomainError(f"coefficient {n} outside 0..{self.order}")
        return self.coeffs[n]

    def _same_order(self, other):
        if not isinstance(other, TruncatedSeries):
            return False
        if other.order != self.order:
            raise DomainError(f"order mismatch: {self.order} vs {other.order}")
        return True

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if not self._same_order(other):
            return NotImplemented
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not self._same_order(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._same_order(other):
            return NotImplemented
        return TruncatedSeries(kernels.series_mul(self.coeffs, other.coeffs, self.order))

    __rmul__ = __mul__

    def scale(self, c):
        return TruncatedSeries([c * a for a in self.coeffs])

    def inverse(self):
        if self.coeffs[0] == 0:
            raise DomainError("series with zero constant term has no inverse")
        return TruncatedSeries(kernels.series_inverse(self.coeffs, self.order))

    def truncate(self, order):
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_scale(a, c):
    return a.scale(c)


def series_inverse(a):
    return a.inverse()


def coefficient(a, n):
    return a.coefficient(n)


def exp_d_series(d, order):
    """exp_d(t) = sum t**n / [n]_d! through t**order."""
    _check_d(d)
    _check_index("order", order)
    return TruncatedSeries([Fraction(1, sd_factorial(d, n)) for n in range(order + 1)])


def exp_d_partial_sum(d, m):
    """The polynomial T_{d,m}(x) = sum_{k<=m} x**k / [k]_d!."""
    _check_d(d)
    _check_index("m", m)
    return Polynomial([Fraction(1, sd_factorial(d, k)) for k in range(m + 1)])


def sigma_series(d, upper, lower, order):
    """S_d-hypergeometric series with positive integer parameters.

    Coefficient n is prod (a_j)_{d,n} / (prod (b_i)_{d,n} [n]_d!).
    """
    _check_d(d)
    _check_index("order", order)
    for a in upper:
        if not isinstance(a, int) or a < 1:
            raise DomainError(f"upper parameter must be a positive integer, got {a!r}")
    for b in lower:
        if not isinstance(b, int) or b < 1:
            raise DomainError(f"lower parameter must be a positive integer, got {b!r}")
    coeffs = []
    for n in range(order + 1):
        num = prod(sd_pochhammer(d, a, n) for a in upper)
        den = prod(sd_pochhammer(d, b, n) for b in lower) * sd_factorial(d, n)
        coeffs.append(Fraction(num, den))
    return TruncatedSeries(coeffs)


def one_sigma_one_tail(d, m, order):
    """1sigma1(1; m+1; t) through t**order, cross-checked against exp_d.

    The second route is [m]_d! t**-m (exp_d(t) - T_{d,m-1}(t)), obtained by
    dropping the first m coefficients of exp_d.
    """
    _check_d(d)
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be an integer >= 1, got {m!r}")
    direct = sigma_series(d, [1], [m + 1], order)
    tail = exp_d_series(d, order + m).coeffs[m:]
    shifted = TruncatedSeries(tail).scale(sd_factorial(d, m))
    if shifted != direct:
        raise ConsistencyError(f"1sigma1 tail mismatch at d={d}, m={m}")
    return direct


def exp_hypergeometric_coefficient_check(d, order):
    """Check 1/[n]_d! = (d!)**n / (n! (2)_n ... (d)_n) for n <= order."""
    _check_d(d)
    for n in range(order + 1):
        rhs = Fraction(factorial(d) ** n,
                       factorial(n) * prod(rising_factorial(j, n) for j in range(2, d + 1)))
        if Fraction(1, sd_factorial(d, n)) != rhs:
            return False
    return True
