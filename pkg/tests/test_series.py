from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdcalc.combinatorics import sd_factorial
from sdcalc.errors import DomainError
from sdcalc.series import (
    TruncatedSeries,
    coefficient,
    exp_d_partial_sum,
    exp_d_series,
    exp_hypergeometric_coefficient_check,
    one_sigma_one_tail,
    series_add,
    series_inverse,
    series_mul,
    series_scale,
    sigma_series,
)

F = Fraction


def test_basic_arithmetic():
    assert series_inverse(TruncatedSeries([1, 1], 3)).coeffs == (1, -1, 1, -1)
    assert series_mul(TruncatedSeries([1, 1, 0]), TruncatedSeries([1, -1, 0])).coeffs == (1, 0, -1)
    assert series_add(TruncatedSeries([1, 2]), TruncatedSeries([3, 4])).coeffs == (4, 6)
    assert series_scale(TruncatedSeries([1, 2]), F(1, 2)).coeffs == (F(1, 2), 1)
    assert coefficient(TruncatedSeries([5, 6]), 1) == 6


def test_errors():
    with pytest.raises(DomainError):
        TruncatedSeries([1, 2]) + TruncatedSeries([1, 2, 3])
    with pytest.raises(DomainError):
        TruncatedSeries([0, 1]).inverse()
    with pytest.raises(DomainError):
        TruncatedSeries([1, 2]).coefficient(2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=9), min_size=1, max_size=10)
       .filter(lambda c: c[0] != 0))
def test_inverse_unit(cs):
    s = TruncatedSeries(cs)
    assert s * s.inverse() == TruncatedSeries([1], s.order)


def test_exp_d_series():
    assert exp_d_series(2, 3).coeffs == (1, 1, F(1, 3), F(1, 18))
    assert exp_d_series(3, 3).coeffs == (1, 1, F(1, 4), F(1, 40))
    assert exp_d_series(1, 6).coeffs == tuple(F(1, factorial(n)) for n in range(7))


def test_partial_sum():
    assert exp_d_partial_sum(2, 0) == 1
    assert exp_d_partial_sum(2, 2).coeffs == (1, 1, F(1, 3))
    assert exp_d_partial_sum(5, 1).coeffs == (1, 1)


def test_sigma_series():
    for d in range(1, 6):
        assert sigma_series(d, [], [], 8) == exp_d_series(d, 8)
    assert sigma_series(2, [1], [3], 3).coeffs == (1, F(1, 6), F(1, 60), F(1, 900))
    # d = 1: ordinary 1F1(a; b; t) coefficients (a)_n / ((b)_n n!)
    from sdcalc.combinatorics import rising_factorial
    for a in (1, 2, 5):
        for b in (1, 3):
            expected = tuple(F(rising_factorial(a, n), rising_factorial(b, n) * factorial(n))
                             for n in range(9))
            assert sigma_series(1, [a], [b], 8).coeffs == expected
    with pytest.raises(DomainError):
        sigma_series(2, [1], [0], 3)


def test_one_sigma_one_tail():
    assert one_sigma_one_tail(2, 1, 3).coeffs == (1, F(1, 3), F(1, 18), F(1, 180))
    assert one_sigma_one_tail(2, 2, 2).coeffs == (1, F(1, 6), F(1, 60))
    # (exp_2(t) - 1) / t
    shifted = exp_d_series(2, 4).coeffs[1:]
    assert one_sigma_one_tail(2, 1, 3).coeffs == shifted
    for d in range(1, 6):
        for m in range(1, 7):
            s = one_sigma_one_tail(d, m, 30)
            assert s.coeffs[0] == 1


def test_exp_hypergeometric():
    for d in range(1, 6):
        assert exp_hypergeometric_coefficient_check(d, 20)
    # d = 2 form: [n]_2! 2^n = n! (n+1)!
    for n in range(20):
        assert sd_factorial(2, n) * 2**n == factorial(n) * factorial(n + 1)


def test_product_law():
    from sdcalc.checks import product_law_instance
    for d in range(1, 6):
        for x, y in [(F(1), F(1)), (F(-2, 3), F(5, 7)), (F(0), F(3))]:
            left, right = product_law_instance(d, x, y, 12)
            assert left == right
