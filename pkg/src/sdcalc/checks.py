"""Verification suites beyond the Bernoulli catalogue.

Each suite takes ``(d_values, m_values, n_max)`` and returns a list of
``IdentityReport``; suites that have no m parameter ignore it. ``SUITES``
maps selector names to suite functions in execution order, with the
Bernoulli identities I1..I10 appended.
"""
import random
from fractions import Fraction
from math import comb, factorial, prod

from sdcalc import bernoulli
from sdcalc.combinatorics import (
    hoggatt_binomial,
    hoggatt_binomial_product_form,
    narayana,
    pascal_factor,
    rising_factorial,
    sd_factorial,
    sd_number,
    sd_number_convolution,
    sd_number_via_binomial_sum,
    sd_number_via_stirling,
)
from sdcalc.polynomials import (
    BivariatePolynomial,
    Polynomial,
    bivariate_hoggatt,
    kummer_polynomial,
    kummer_touchard_rhs,
    sd_derivative_operator_form,
    sd_derivative_stirling_form,
    sd_product_rule_rhs,
)
from sdcalc.report import IdentityReport
from sdcalc.series import (
    TruncatedSeries,
    exp_d_partial_sum,
    exp_d_series,
    exp_hypergeometric_coefficient_check,
    one_sigma_one_tail,
)

SEED = 20240917


def _report(name, params, ok, **witness):
    return IdentityReport(
        identity=name,
        params=params,
        passed=bool(ok),
        witness={} if ok else {k: str(v) for k, v in witness.items()},
    )


def random_rational(rng, lo=-9, hi=9):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def random_polynomial(rng, degree):
    return Polynomial([random_rational(rng) for _ in range(degree + 1)])


def sd_representations(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(n_max + 1):
            a = sd_number(d, n)
            b = sd_number_via_binomial_sum(d, n)
            c = sd_number_via_stirling(d, n)
            ok = a == b == c
            if d >= 2:
                ok = ok and sd_number(d, n + 1) == a + sd_number(d - 1, n + 1)
            out.append(_report("sd-representations", {"d": d, "n": n}, ok,
                               binomial=a, vandermonde=b, stirling=c))
    return out


def simplitorial(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(n_max + 1):
            f = sd_factorial(d, n)
            ok = f * factorial(d) ** n * prod(factorial(i) for i in range(d)) == \
                prod(factorial(n + i) for i in range(d))
            if d >= 2:
                descent = Fraction(rising_factorial(d, n), d**n) * sd_factorial(d - 1, n)
                ok = ok and descent == f
            out.append(_report("simplitorial", {"d": d, "n": n}, ok, value=f))
    return out


def hoggatt_pascal(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(n_max + 1):
            ok = True
            for k in range(n + 1):
                h = hoggatt_binomial(d, n, k)
                ok = ok and h == hoggatt_binomial(d, n, n - k) \
                    and h == hoggatt_binomial_product_form(d, n, k)
                if d >= 2 and k >= 1:
                    rhs = pascal_factor(d, n, k) * h + hoggatt_binomial(d, n, k - 1)
                    ok = ok and hoggatt_binomial(d, n + 1, k) == rhs
            out.append(_report("hoggatt-pascal", {"d": d, "n": n}, ok))
    return out


def hoggatt_integrality(ds, ms, n_max):
    # an observation about the ranges checked, not a theorem
    out = []
    for d in ds:
        for n in range(n_max + 1):
            bad = [k for k in range(n + 1) if hoggatt_binomial(d, n, k).denominator != 1]
            out.append(_report("hoggatt-integrality", {"d": d, "n": n}, not bad,
                               non_integral_k=bad))
    return out


def convolution(ds, ms, n_max):
    out = []
    top = max(1, min(n_max, 10))
    for dim in ds:
        ok = all(sd_number_convolution(a, b, dim) == sd_number(dim, a + b)
                 for a in range(1, top + 1) for b in range(1, top + 1))
        out.append(_report("convolution", {"d": dim, "a_b_max": top}, ok))
    return out


def narayana_identities(ds, ms, n_max):
    out = []
    for n in range(1, n_max + 1):
        ok = True
        for k in range(1, n + 1):
            lhs = comb(n + 1, k) * comb(n + 2, k)
            rhs = (Fraction(n + 2 + k, n + 2 - k) * comb(n, k) * comb(n + 1, k)
                   + Fraction(k + 1, k) * comb(n, k - 1) * comb(n + 1, k - 1))
            ok = ok and lhs == rhs
            ok = ok and narayana(n, k) == hoggatt_binomial(2, n, k)
            ok = ok and pascal_factor(2, n, k) == Fraction(n + 2 + k, n + 2 - k)
        out.append(_report("narayana", {"d": 2, "n": n}, ok))
    return out


def derivative_agreement(ds, ms, n_max):
    out = []
    rng = random.Random(SEED)
    for d in ds:
        ok = True
        for n in range(n_max + 1):
            mono = Polynomial.monomial(n)
            a = sd_derivative_operator_form(mono, d)
            ok = ok and a == sd_derivative_stirling_form(mono, d)
            expected = Polynomial() if n == 0 else Polynomial.monomial(n - 1, sd_number(d, n))
            ok = ok and a == expected
        for _ in range(10):
            p = random_polynomial(rng, n_max)
            ok = ok and sd_derivative_operator_form(p, d) == sd_derivative_stirling_form(p, d)
        out.append(_report("derivative-agreement", {"d": d, "n_max": n_max}, ok))
    return out


def product_rule(ds, ms, n_max):
    out = []
    rng = random.Random(SEED + 1)
    for d in ds:
        if d < 2:
            continue
        ok = True
        for _ in range(5):
            f = random_polynomial(rng, rng.randint(0, n_max))
            g = random_polynomial(rng, rng.randint(0, n_max))
            ok = ok and sd_product_rule_rhs(f, g, d) == sd_derivative_operator_form(f * g, d)
        out.append(_report("product-rule", {"d": d}, ok))
    return out


def kummer_touchard(ds, ms, n_max):
    out = []
    for d in ds:
        lhs, rhs = kummer_polynomial(d), kummer_touchard_rhs(d)
        out.append(_report("kummer-touchard", {"d": d}, lhs == rhs, kummer=lhs, touchard=rhs))
    return out


_BIVARIATE_POINTS = (Fraction(1), Fraction(-3, 2), Fraction(2, 7))


def bivariate_derivative(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(1, n_max + 1):
            hi, lo = bivariate_hoggatt(d, n), bivariate_hoggatt(d, n - 1)
            ok = all(sd_derivative_operator_form(hi.at_y(a), d) == lo.at_y(a) * sd_number(d, n)
                     for a in _BIVARIATE_POINTS)
            out.append(_report("bivariate-derivative", {"d": d, "n": n}, ok))
    return out


def bivariate_recurrence_rhs(d, n):
    """(x+y) (x (+)_d y)^(n) plus the S_d correction sum."""
    base = (BivariatePolynomial.x() + BivariatePolynomial.y()) * bivariate_hoggatt(d, n)
    terms = {}
    for k in range(1, n + 1):
        j = n + 1 - k
        inner = sum(sd_number(d - i, j) * sd_number(i, k) for i in range(1, d))
        terms[(j, k)] = hoggatt_binomial(d, n, k) * Fraction(inner, sd_number(d, j))
    return base + BivariatePolynomial(terms)


def bivariate_recurrence(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(n_max + 1):
            ok = bivariate_hoggatt(d, n + 1) == bivariate_recurrence_rhs(d, n)
            if d == 2:
                correction = bivariate_recurrence_rhs(2, n) - (
                    (BivariatePolynomial.x() + BivariatePolynomial.y()) * bivariate_hoggatt(2, n))
                narayana_form = BivariatePolynomial({
                    (n + 1 - k, k): Fraction(2 * k, (k + 1) * (n + 2 - k)) * comb(n, k) * comb(n + 1, k)
                    for k in range(1, n + 1)
                })
                ok = ok and correction == narayana_form
            out.append(_report("bivariate-recurrence", {"d": d, "n": n}, ok))
    return out


def exp_eigenfunction(ds, ms, n_max):
    out = []
    for d in ds:
        for n in range(1, n_max + 1):
            ok = sd_derivative_operator_form(exp_d_partial_sum(d, n), d) == exp_d_partial_sum(d, n - 1)
            out.append(_report("exp-eigenfunction", {"d": d, "n": n}, ok))
    return out


def product_law_instance(d, x, y, order):
    """Both sides of exp_d(x t) exp_d(y t) = sum (x (+)_d y)^(n) t**n / [n]_d!."""
    e = exp_d_series(d, order)
    ex = TruncatedSeries([c * x**n for n, c in enumerate(e.coeffs)])
    ey = TruncatedSeries([c * y**n for n, c in enumerate(e.coeffs)])
    left = ex * ey
    right = TruncatedSeries([bivariate_hoggatt(d, n)(x, y) / sd_factorial(d, n)
                             for n in range(order + 1)])
    return left, right


def product_law(ds, ms, n_max, pairs=5):
    out = []
    rng = random.Random(SEED + 2)
    points = [(random_rational(rng), random_rational(rng)) for _ in range(pairs)]
    for d in ds:
        for x, y in points:
            left, right = product_law_instance(d, x, y, n_max)
            out.append(_report("product-law", {"d": d, "x": str(x), "y": str(y)},
                               left == right, left=left, right=right))
    return out


def sigma_tail(ds, ms, n_max):
    out = []
    for d in ds:
        for m in ms:
            # one_sigma_one_tail raises on disagreement
            s = one_sigma_one_tail(d, m, n_max)
            out.append(_report("sigma-tail", {"d": d, "m": m}, s.coeffs[0] == 1))
    return out


def exp_hypergeometric(ds, ms, n_max):
    return [_report("exp-hypergeometric", {"d": d},
                    exp_hypergeometric_coefficient_check(d, n_max)) for d in ds]


def series_round_trip(ds, ms, n_max):
    out = []
    for d in ds:
        gfs = [TruncatedSeries(exp_d_series(d, n_max + 1).coeffs[1:])]
        gfs += [one_sigma_one_tail(d, m, n_max) for m in ms]
        unit = TruncatedSeries([1], n_max)
        ok = all(g * g.inverse() == unit for g in gfs)
        out.append(_report("series-inverse", {"d": d}, ok))
    return out


def _bernoulli_suite(key):
    def run(ds, ms, n_max):
        return bernoulli.verify_identity(key, ds, ms, range(n_max + 1))
    run.__name__ = f"bernoulli_{key}"
    return run


SUITES = {
    "sd-representations": sd_representations,
    "simplitorial": simplitorial,
    "hoggatt-pascal": hoggatt_pascal,
    "hoggatt-integrality": hoggatt_integrality,
    "convolution": convolution,
    "narayana": narayana_identities,
    "derivative-agreement": derivative_agreement,
    "product-rule": product_rule,
    "kummer-touchard": kummer_touchard,
    "bivariate-derivative": bivariate_derivative,
    "bivariate-recurrence": bivariate_recurrence,
    "exp-eigenfunction": exp_eigenfunction,
    "product-law": product_law,
    "sigma-tail": sigma_tail,
    "exp-hypergeometric": exp_hypergeometric,
    "series-inverse": series_round_trip,
}
for _key in bernoulli.IDENTITIES:
    SUITES[_key] = _bernoulli_suite(_key)


def resolve_suite(selector):
    """Map a selector (suite name, I-number or Bernoulli identity name) to a key."""
    if selector in SUITES:
        return selector
    return bernoulli.resolve_identity(selector).key
