"""Exact calculus of simplicial d-polytopic numbers.

Figurate-number combinatorics, S_d-derivatives, S_d-exponential and
hypergeometric series, and S_d-(hypergeometric) Bernoulli numbers and
polynomials, all over exact rationals.
"""
from sdcalc.bernoulli import (
    BernoulliPolynomialFamily,
    BernoulliTable,
    audit_paper_tables,
    bernoulli_numbers_composition,
    bernoulli_numbers_series,
    bernoulli_polynomials,
    verify_identity,
)
from sdcalc.combinatorics import (
    hoggatt_binomial,
    pascal_factor,
    rising_factorial,
    sd_factorial,
    sd_number,
    sd_number_via_binomial_sum,
    sd_number_via_stirling,
    sd_pochhammer,
    stirling1_unsigned,
    stirling2,
)
from sdcalc.errors import ConsistencyError, DomainError, ResourceLimitError
from sdcalc.kernels import BACKEND
from sdcalc.polynomials import (
    BivariatePolynomial,
    Polynomial,
    bivariate_hoggatt,
    hoggatt_translate,
    kummer_polynomial,
    kummer_touchard_rhs,
    sd_derivative_iterated,
    sd_derivative_operator_form,
    sd_derivative_stirling_form,
    sd_product_rule_rhs,
    touchard,
)
from sdcalc.report import IdentityReport
from sdcalc.series import (
    TruncatedSeries,
    exp_d_partial_sum,
    exp_d_series,
    exp_hypergeometric_coefficient_check,
    one_sigma_one_tail,
    sigma_series,
)

__version__ = "0.1.0"
