#!/usr/bin/env python3
"""
⊕ / ⊗ 代数测试 - 整数格点上的精确性质
"""
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tevs.algebra import linear_combination, ominus, oplus, otimes
from tevs.series import validate
from tevs.types import DimensionMismatch, NonFiniteScalar, TimeSeries

nonzero = st.integers(-5, 5).filter(lambda x: x != 0)


@st.composite
def integer_series(draw, dimension: int = 1, max_len: int = 8, grid: int = 12):
    """整数值、整数时间戳的序列"""
    times = sorted(draw(st.lists(st.integers(0, grid - 1), unique=True, max_size=max_len)))
    values = draw(st.lists(st.lists(nonzero, min_size=dimension, max_size=dimension),
                           min_size=len(times), max_size=len(times)))
    return validate(list(zip(values, times)), dimension=dimension)


def series(*pairs) -> TimeSeries:
    return validate(list(pairs))


def test_otimes_scales_values():
    assert otimes(2, series((1, 0), (3, 1))) == series((2, 0), (6, 1))


def test_otimes_identity():
    a = series((1, 0), (-4, 2.5))
    assert otimes(1, a) == a


def test_otimes_zero_gives_omega():
    assert otimes(0, series((1, 0))) == TimeSeries.omega(1)


def test_otimes_rejects_non_finite():
    with pytest.raises(NonFiniteScalar):
        otimes(float("inf"), series((1, 0)))


def test_otimes_drops_underflowing_samples():
    tiny = series((2.0 ** -1074, 0), (1, 1))
    assert otimes(0.25, tiny) == series((0.25, 1))


def test_oplus_cancellation_example():
    a = series((1, 1), (1, 2))
    b = series((-1, 1), (1, 2))
    assert oplus(a, b) == series((2, 2))


def test_oplus_neutral_element():
    a = series((1, 0), (2, 1))
    assert oplus(a, TimeSeries.omega(1)) == a
    assert oplus(TimeSeries.omega(1), a) == a


def test_oplus_merges_disjoint_timestamps():
    a = series((1, 0.5))
    b = series((2, 0.25), (3, 0.75))
    assert oplus(a, b) == series((2, 0.25), (1, 0.5), (3, 0.75))


def test_oplus_rejects_dimension_mismatch():
    a = validate([((1, 1), 0.0)])
    with pytest.raises(DimensionMismatch):
        oplus(a, series((1, 0)))


def test_ominus_examples():
    a = series((1, 0), (2, 1))
    b = series((5, 0.5))
    assert ominus(a, a) == TimeSeries.omega(1)
    assert ominus(oplus(a, b), b) == a
    assert ominus(a, TimeSeries.omega(1)) == a


def test_linear_combination():
    a = series((1, 0))
    b = series((1, 1))
    assert linear_combination([2, -3], [a, b]) == series((2, 0), (-3, 1))


@settings(max_examples=500, deadline=None)
@given(a=integer_series(), b=integer_series())
def test_oplus_is_reversible(a, b):
    assert ominus(oplus(a, b), b) == a


@settings(max_examples=200, deadline=None)
@given(a=integer_series(dimension=2), b=integer_series(dimension=2))
def test_oplus_is_commutative(a, b):
    assert oplus(a, b) == oplus(b, a)


@settings(max_examples=200, deadline=None)
@given(a=integer_series(), b=integer_series(), c=integer_series())
def test_oplus_is_associative_on_integers(a, b, c):
    assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))


@settings(max_examples=200, deadline=None)
@given(a=integer_series(), b=integer_series())
def test_oplus_length_bound(a, b):
    merged = oplus(a, b)
    assert len(merged) <= len(a) + len(b)
    disjoint = not set(a.timestamps.tolist()) & set(b.timestamps.tolist())
    assert (len(merged) == len(a) + len(b)) == disjoint


@settings(max_examples=200, deadline=None)
@given(a=integer_series(), lam=st.integers(-4, 4), mu=st.integers(-4, 4))
def test_otimes_composition(a, lam, mu):
    assert otimes(lam, otimes(mu, a)) == otimes(lam * mu, a)


@settings(max_examples=200, deadline=None)
@given(a=integer_series(), b=integer_series())
def test_results_stay_in_u_star(a, b):
    for result in (oplus(a, b), ominus(a, b), otimes(-3, a)):
        values = result.values
        assert all(any(v != 0.0 for v in row) for row in values)
        assert all(x < y for x, y in zip(result.timestamps, result.timestamps[1:]))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
