from fractions import Fraction
from itertools import product
from math import comb, factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

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
    sd_pochhammer,
    stirling1_unsigned,
    stirling2,
)
from sdcalc.errors import DomainError


@pytest.mark.parametrize("d, n, expected", [
    (2, 4, 10), (3, 5, 35), (5, 0, 0), (1, 7, 7),
])
def test_sd_number_examples(d, n, expected):
    assert sd_number(d, n) == expected


def test_published_lists():
    assert [sd_number(2, n) for n in range(6)] == [0, 1, 3, 6, 10, 15]
    assert [sd_number(3, n) for n in range(6)] == [0, 1, 4, 10, 20, 35]
    assert [sd_number(4, n) for n in range(4)] == [0, 1, 5, 15]
    assert [sd_number(5, n) for n in range(6)] == [0, 1, 6, 21, 56, 126]


@pytest.mark.parametrize("bad", [(0, 3), (-1, 3), (2, -1)])
def test_sd_number_domain(bad):
    with pytest.raises(DomainError):
        sd_number(*bad)


def test_representations_exhaustive():
    for d in range(1, 9):
        for n in range(51):
            v = sd_number(d, n)
            assert sd_number_via_binomial_sum(d, n) == v
            assert sd_number_via_stirling(d, n) == v


def test_representation_examples():
    assert sd_number_via_binomial_sum(2, 4) == 10
    assert sd_number_via_binomial_sum(4, 2) == 5
    assert sd_number_via_binomial_sum(3, 0) == 0
    assert sd_number_via_stirling(2, 3) == 6
    assert sd_number_via_stirling(1, 13) == 13
    assert sd_number_via_stirling(5, 4) == 56


def test_monotone_and_zero():
    for d in range(1, 7):
        vals = [sd_number(d, n) for n in range(30)]
        assert vals[0] == 0 and all(v > 0 for v in vals[1:])
        assert all(b > a for a, b in zip(vals[1:], vals[2:]))


def test_recursion():
    for d in range(2, 9):
        for n in range(50):
            assert sd_number(d, n + 1) == sd_number(d, n) + sd_number(d - 1, n + 1)


@pytest.mark.parametrize("d, n, expected", [(2, 4, 1 * 3 * 6 * 10), (3, 3, 1 * 4 * 10), (4, 0, 1)])
def test_sd_factorial_examples(d, n, expected):
    assert sd_factorial(d, n) == expected


def test_simplitorial_formulas():
    for d in range(1, 9):
        for n in range(31):
            f = sd_factorial(d, n)
            assert f == prod(sd_number(d, k) for k in range(1, n + 1))
            assert f * factorial(d) ** n * prod(factorial(i) for i in range(d)) == \
                prod(factorial(n + i) for i in range(d))
            if d >= 2:
                assert f == Fraction(rising_factorial(d, n), d**n) * sd_factorial(d - 1, n)


def test_hoggatt_examples():
    assert hoggatt_binomial(2, 4, 2) == 20
    assert hoggatt_binomial(2, 4, 2) == Fraction(1, 3) * comb(4, 2) * comb(5, 2)
    assert hoggatt_binomial(3, 6, 3) == 980
    assert hoggatt_binomial(3, 6, 3) == 20 * Fraction(35, 4) * Fraction(28, 5)
    assert hoggatt_binomial(5, 9, 0) == hoggatt_binomial(5, 9, 9) == 1


def test_hoggatt_domain():
    with pytest.raises(DomainError):
        hoggatt_binomial(2, 3, 4)
    with pytest.raises(DomainError):
        hoggatt_binomial(2, 3, -1)


def test_hoggatt_symmetry_pascal_product_form():
    for d in range(1, 7):
        for n in range(26):
            if n:
                assert hoggatt_binomial(d, n, 1) == sd_number(d, n)
            for k in range(n + 1):
                h = hoggatt_binomial(d, n, k)
                assert h == hoggatt_binomial(d, n, n - k)
                assert h == hoggatt_binomial_product_form(d, n, k)
                assert h.denominator == 1  # observed, not proved
                if d >= 2 and k >= 1:
                    assert hoggatt_binomial(d, n + 1, k) == \
                        pascal_factor(d, n, k) * h + hoggatt_binomial(d, n, k - 1)


def test_pascal_factor_examples():
    assert pascal_factor(2, 4, 2) == 2
    assert pascal_factor(3, 3, 1) == Fraction(19, 10)
    # solved from the binomials directly
    assert pascal_factor(3, 3, 1) == Fraction(hoggatt_binomial(3, 4, 1) - 1, hoggatt_binomial(3, 3, 1))
    for n in range(1, 20):
        for k in range(1, n + 1):
            assert pascal_factor(2, n, k) == Fraction(n + 2 + k, n + 2 - k)
    with pytest.raises(DomainError):
        pascal_factor(2, 3, 0)
    with pytest.raises(DomainError):
        pascal_factor(2, 3, 4)


def test_narayana():
    for n in range(1, 26):
        for k in range(1, n + 1):
            assert narayana(n, k) == hoggatt_binomial(2, n, k)
            lhs = comb(n + 1, k) * comb(n + 2, k)
            rhs = (Fraction(n + 2 + k, n + 2 - k) * comb(n, k) * comb(n + 1, k)
                   + Fraction(k + 1, k) * comb(n, k - 1) * comb(n + 1, k - 1))
            assert lhs == rhs


def test_pochhammer():
    assert sd_pochhammer(2, 3, 2) == 60
    for d in range(1, 6):
        assert sd_pochhammer(d, 7, 0) == 1
        for n in range(15):
            assert sd_pochhammer(d, 1, n) == sd_factorial(d, n)
    with pytest.raises(DomainError):
        sd_pochhammer(2, 0, 3)


def _expand_rising(n):
    # coefficients of x(x+1)...(x+n-1), by plain list convolution
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * j
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs


def _set_partitions(n, k):
    # surjections of n labelled items onto k blocks, divided by k!
    hits = sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return hits // factorial(k)


def test_stirling_against_oracles():
    assert stirling1_unsigned(4, 2) == 11 == _expand_rising(4)[2]
    assert stirling2(4, 2) == 7 == _set_partitions(4, 2)
    for n in range(8):
        assert [stirling1_unsigned(n, k) for k in range(n + 1)] == _expand_rising(n)
        for k in range(n + 1):
            assert stirling2(n, k) == (_set_partitions(n, k) if n else 1)
        assert stirling1_unsigned(n, n) == stirling2(n, n) == 1
        assert stirling1_unsigned(n, n + 1) == stirling2(n, n + 3) == 0


def test_rising_factorial():
    assert rising_factorial(3, 2) == 12
    for n in range(10):
        assert rising_factorial(1, n) == factorial(n)
        for d in range(1, 6):
            assert rising_factorial(d, n) == factorial(n + d - 1) // factorial(d - 1)


def test_convolution():
    for dim in range(1, 9):
        for a in range(1, 11):
            for b in range(1, 11):
                assert sd_number_convolution(a, b, dim) == sd_number(dim, a + b)


@given(st.integers(1, 12), st.integers(0, 200))
def test_sd_number_closed_form(d, n):
    assert sd_number(d, n) == rising_factorial(n, d) // factorial(d)
