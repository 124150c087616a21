"""Both kernel backends against naive Fraction oracles."""
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)


def naive_mul(a, b, order):
    return [sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(order + 1)]


def compositions(n):
    # cut points between 1..n
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            edges = (0,) + cuts + (n,)
            yield [edges[i + 1] - edges[i] for i in range(len(edges) - 1)]


def test_compositions_oracle_counts():
    assert [sum(1 for _ in compositions(n)) for n in range(1, 7)] == [1, 2, 4, 8, 16, 32]


def test_inverse_geometric(backend):
    assert backend.series_inverse([1, 1, 0, 0], 3) == [1, -1, 1, -1]


def test_mul_small(backend):
    assert backend.series_mul([1, 1, 0], [1, -1, 0], 2) == [1, 0, -1]


def test_inverse_negative_constant(backend):
    assert backend.series_inverse([Fraction(-2), 1], 2) == [Fraction(-1, 2), Fraction(-1, 4), Fraction(-1, 8)]


def test_inverse_zero_constant(backend):
    with pytest.raises(ZeroDivisionError):
        backend.series_inverse([0, 1], 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=12), st.data())
def test_mul_matches_naive(a, data):
    from sdcalc import _pykernels
    b = data.draw(st.lists(rationals, min_size=len(a), max_size=len(a)))
    order = len(a) - 1
    expected = naive_mul(a, b, order)
    assert _pykernels.series_mul(a, b, order) == expected
    try:
        from sdcalc import _ckernels
    except ImportError:
        return
    assert _ckernels.series_mul(a, b, order) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=12).filter(lambda a: a[0] != 0))
def test_inverse_round_trip(a):
    from sdcalc import _pykernels
    order = len(a) - 1
    inv = _pykernels.series_inverse(a, order)
    assert naive_mul(a, inv, order) == [1] + [0] * order
    try:
        from sdcalc import _ckernels
    except ImportError:
        return
    assert _ckernels.series_inverse(a, order) == inv


@pytest.mark.parametrize("n", range(0, 11))
def test_composition_sum_matches_enumeration(backend, n):
    dens = [1] + [k * k + 3 for k in range(1, n + 1)]
    if n == 0:
        expected = Fraction(1)
    else:
        expected = Fraction(0)
        for comp in compositions(n):
            term = Fraction((-1) ** len(comp))
            for part in comp:
                term /= dens[part]
            expected += term
    assert backend.composition_sum(dens, n) == expected


def test_short_input_is_zero_padded(backend):
    assert backend.series_mul([1], [1, 1], 3) == [1, 1, 0, 0]


@pytest.mark.parametrize("call", [
    lambda k: k.series_mul([1], [1], -1),
    lambda k: k.series_inverse([1], -1),
    lambda k: k.composition_sum([1, 2], 3),
])
def test_bad_arguments_raise(backend, call):
    with pytest.raises(ValueError):
        call(backend)


def test_env_var_forces_python_backend():
    import os
    import subprocess
    import sys
    env = dict(os.environ, SDCALC_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "import sdcalc.kernels as k; print(k.BACKEND)"],
                          capture_output=True, text=True, env=env)
    assert proc.stdout.strip() == "python"
