"""Dense exact-rational polynomials and the S_d-derivative operators.

``Polynomial`` holds coefficients in ascending degree; ``BivariatePolynomial``
holds a sparse map (i, j) -> coefficient of x**i y**j. Both are immutable and
all arithmetic is exact over ``Fraction``.
"""
from fractions import Fraction
from math import comb, factorial
from numbers import Rational

from sdcalc.combinatorics import (
    _check_d,
    _check_index,
    hoggatt_binomial,
    stirling1_unsigned,
    stirling2,
)
from sdcalc.errors import ConsistencyError, DomainError


class Polynomial:
    """Univariate polynomial in x over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, n, c=1):
        return cls([0] * n + [c])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        """Highest power with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Rational):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_degree(self, k):
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def derivative(self, k=1):
        """k-th ordinary derivative."""
        cs = self.coeffs
        for _ in range(k):
            cs = [i * c for i, c in enumerate(cs)][1:]
        return Polynomial(cs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class BivariatePolynomial:
    """Polynomial in x and y; ``terms`` maps (deg_x, deg_y) to a nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def coefficient(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return BivariatePolynomial({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x, y):
        return sum((c * Fraction(x) ** i * Fraction(y) ** j
                    for (i, j), c in self.terms.items()), Fraction(0))

    def at_y(self, y):
        """Substitute a rational for y, leaving a polynomial in x."""
        y = Fraction(y)
        width = 1 + max((i for i, _ in self.terms), default=-1)
        out = [Fraction(0)] * width
        for (i, j), c in self.terms.items():
            out[i] += c * y**j
        return Polynomial(out)

    def __repr__(self):
        body = ", ".join(f"({i}, {j}): {c}" for (i, j), c in self.terms.items())
        return f"BivariatePolynomial({{{body}}})"


def _as_poly(p):
    return p if isinstance(p, Polynomial) else Polynomial([p])


def sd_derivative_operator_form(p, d):
    """S_d-derivative as sum_k C(d-1, k)/(k+1)! x**k p^(k+1)."""
    _check_d(d)
    p = _as_poly(p)
    out = Polynomial()
    for k in range(d):
        dk = p.derivative(k + 1)
        if dk.is_zero():
            break
        out = out + dk.shift_degree(k) * Fraction(comb(d - 1, k), factorial(k + 1))
    return out


def sd_derivative_stirling_form(p, d):
    """S_d-derivative as (1/d!) sum_k s1(d, k) x**-1 (xD)**k.

    (xD)**k sends x**n to n**k x**n, so each monomial is scaled by a
    Stirling-weighted power sum and lowered by one degree.
    """
    _check_d(d)
    p = _as_poly(p)
    s1 = [stirling1_unsigned(d, k) for k in range(d + 1)]
    df = factorial(d)
    out = []
    for n, c in enumerate(p.coeffs):
        weight = sum(s * n**k for k, s in enumerate(s1))
        if n == 0:
            if weight and c:
                raise ConsistencyError("constant term would produce x**-1")
            continue
        out.append(c * Fraction(weight, df))
    return Polynomial(out)


def sd_derivative_iterated(p, d, k):
    """Apply the S_d-derivative k times."""
    _check_d(d)
    _check_index("order k", k)
    p = _as_poly(p)
    for _ in range(k):
        if p.is_zero():
            break
        p = sd_derivative_operator_form(p, d)
    return p


def sd_product_rule_rhs(f, g, d):
    """Right side of the S_d Leibniz rule for D(f g), d >= 2."""
    _check_d(d)
    if d < 2:
        raise DomainError("the S_d product rule is stated for d >= 2")
    f, g = _as_poly(f), _as_poly(g)
    out = (sd_derivative_operator_form(f, d) * g
           + f * sd_derivative_operator_form(g, d))
    for k in range(1, d):
        inner = Polynomial()
        for i in range(1, k + 1):
            inner = inner + f.derivative(k + 1 - i) * g.derivative(i) * comb(k + 1, i)
        out = out + inner.shift_degree(k) * Fraction(comb(d - 1, k), factorial(k + 1))
    return out


def touchard(n):
    """Touchard polynomial sum_i S2(n, i) x**i."""
    _check_index("n", n)
    return Polynomial([stirling2(n, i) for i in range(n + 1)])


def kummer_polynomial(d):
    """sum_{k<d} C(d-1, k) x**k/(k+1)!, i.e. e**x * 1F1(1-d; 2; -x)."""
    _check_d(d)
    return Polynomial([Fraction(comb(d - 1, k), factorial(k + 1)) for k in range(d)])


def kummer_touchard_rhs(d):
    """(1/(d! x)) sum_k s1(d, k) T_k(x), the Touchard side of Kummer-Touchard."""
    _check_d(d)
    q = Polynomial()
    for k in range(d + 1):
        q = q + touchard(k) * stirling1_unsigned(d, k)
    q = q * Fraction(1, factorial(d))
    if q[0] != 0:
        raise ConsistencyError(f"Touchard combination has constant term {q[0]}")
    return Polynomial(q.coeffs[1:])


def bivariate_hoggatt(d, n):
    """(x (+)_d y)^(n) = sum_k <n k>_d x**(n-k) y**k."""
    _check_d(d)
    _check_index("n", n)
    return BivariatePolynomial(
        {(n - k, k): hoggatt_binomial(d, n, k) for k in range(n + 1)}
    )


def hoggatt_translate(family, d, n, y):
    """sum_k <n k>_d p_k(x) y**(n-k) for a polynomial family p_0, p_1, ...

    This is the formal shift x -> x (+)_d y applied to the n-th member of a
    family whose generating function is a product with exp_d(x t).
    """
    _check_d(d)
    _check_index("n", n)
    if len(family) < n + 1:
        raise DomainError(f"family has {len(family)} members, need {n + 1}")
    y = Fraction(y)
    out = Polynomial()
    for k in range(n + 1):
        out = out + _as_poly(family[k]) * (hoggatt_binomial(d, n, k) * y ** (n - k))
    return out
