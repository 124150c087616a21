"""Integer and rational kernels for simplicial d-polytopic numbers.

Notation used in docstrings: ``[n]_d`` is the n-th d-simplex number
C(n+d-1, d), ``[n]_d!`` its running product (the simplitorial) and
``<n k>_d`` the d-Hoggatt binomial built from simplitorials.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from sdcalc.errors import ConsistencyError, DomainError


def _check_d(d):
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"dimension d must be an integer >= 1, got {d!r}")


def _check_index(name, n):
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")


def sd_number(d, n):
    """Return ``[n]_d = C(n+d-1, d)``.

    >>> [sd_number(2, n) for n in range(6)]
    [0, 1, 3, 6, 10, 15]
    """
    _check_d(d)
    _check_index("n", n)
    return comb(n + d - 1, d)


def sd_number_via_binomial_sum(d, n):
    """``[n]_d`` as sum_k C(d-1, k) C(n, k+1)."""
    _check_d(d)
    _check_index("n", n)
    return sum(comb(d - 1, k) * comb(n, k + 1) for k in range(d))


def sd_number_via_stirling(d, n):
    """``[n]_d`` as (1/d!) sum_k s1(d, k) n**k with unsigned s1."""
    _check_d(d)
    _check_index("n", n)
    total = sum(stirling1_unsigned(d, k) * n**k for k in range(d + 1))
    q, r = divmod(total, factorial(d))
    if r:
        raise ConsistencyError(
            f"rising factorial {total} of {n} not divisible by {d}!"
        )
    return q


def _sd_number_ext(d, n):
    # degree-0 simplex count, needed by the dimension-index convolution
    if d == 0:
        return 1
    return sd_number(d, n)


def rising_factorial(a, n):
    """a (a+1) ... (a+n-1); 1 for n = 0."""
    _check_index("n", n)
    return prod(range(a, a + n))


@lru_cache(maxsize=None)
def _sd_factorial(d, n):
    if n == 0:
        return 1
    return _sd_factorial(d, n - 1) * comb(n + d - 1, d)


def sd_factorial(d, n):
    """The simplitorial ``[n]_d! = [1]_d [2]_d ... [n]_d``."""
    _check_d(d)
    _check_index("n", n)
    # fill the cache bottom-up so deep n never recurses far
    for j in range(0, n, 256):
        _sd_factorial(d, j)
    return _sd_factorial(d, n)


def hoggatt_binomial(d, n, k):
    """d-Hoggatt binomial ``<n k>_d`` as an exact rational.

    Integrality is observed in practice but not assumed, so the result is a
    ``Fraction``.
    """
    _check_d(d)
    _check_index("n", n)
    if not isinstance(k, int) or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n!r}, k={k!r}")
    return Fraction(sd_factorial(d, n), sd_factorial(d, k) * sd_factorial(d, n - k))


def hoggatt_binomial_product_form(d, n, k):
    """``<n k>_d`` from prod_{i<d} i! (n+i)! / ((k+i)! (n-k+i)!)."""
    _check_d(d)
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n!r}, k={k!r}")
    f = factorial
    num = prod(f(i) * f(n + i) for i in range(d))
    den = prod(f(k + i) * f(n - k + i) for i in range(d))
    return Fraction(num, den)


def sd_pochhammer(d, a, n):
    """``(a)_{d,n} = [a]_d [a+1]_d ... [a+n-1]_d`` for integer ``a >= 1``."""
    _check_d(d)
    _check_index("n", n)
    if not isinstance(a, int) or a < 1:
        raise DomainError(f"Pochhammer base must be a positive integer, got {a!r}")
    return prod(comb(a + i + d - 1, d) for i in range(n))


@lru_cache(maxsize=None)
def _stirling_rows(kind, n):
    rows = [(1,)]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = [0] * (i + 1)
        for k in range(1, i + 1):
            left = prev[k - 1]
            right = prev[k] if k < i else 0
            weight = (i - 1) if kind == 1 else k
            row[k] = left + weight * right
        rows.append(tuple(row))
    return tuple(rows)


def stirling1_unsigned(n, k):
    """Unsigned Stirling number of the first kind; 0 off the triangle."""
    _check_index("n", n)
    if k < 0 or k > n:
        return 0
    return _stirling_rows(1, n)[n][k]


def stirling2(n, k):
    """Stirling number of the second kind; 0 off the triangle."""
    _check_index("n", n)
    if k < 0 or k > n:
        return 0
    return _stirling_rows(2, n)[n][k]


def pascal_factor(d, n, k):
    """Multiplier f with ``<n+1 k>_d = f <n k>_d + <n k-1>_d``.

    f = 1 + (1/[n+1-k]_d) sum_{i=1}^{d-1} [n+1-k]_{d-i} [k]_i.
    """
    _check_d(d)
    if d < 2:
        raise DomainError("pascal_factor needs d >= 2")
    if not isinstance(k, int) or not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n!r}, k={k!r}")
    j = n + 1 - k
    acc = sum(sd_number(d - i, j) * sd_number(i, k) for i in range(1, d))
    return 1 + Fraction(acc, sd_number(d, j))


def sd_number_convolution(a, b, n):
    """sum_{k=0}^{n} [a]_{n-k} [b]_k, the subscript being the dimension.

    Uses ``[x]_0 = 1``; equals ``[a+b]_n``.
    """
    _check_index("a", a)
    _check_index("b", b)
    _check_index("n", n)
    return sum(_sd_number_ext(n - k, a) * _sd_number_ext(k, b) for k in range(n + 1))


def narayana(n, k):
    """Narayana-form (1/(k+1)) C(n, k) C(n+1, k), equal to ``<n k>_2``."""
    return Fraction(comb(n, k) * comb(n + 1, k), k + 1)
