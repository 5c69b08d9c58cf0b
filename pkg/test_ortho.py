#!/usr/bin/env python3
"""
Gram-Schmidt 正交化与实验基生成器测试
"""
import math
import sys

import numpy as np
import pytest

from tevs.algebra import linear_combination, ominus, otimes
from tevs.ortho import gram_schmidt, sincos_family, spike_family
from tevs.series import SMALLEST_POSITIVE, random_series, validate
from tevs.tep import norm, teip
from tevs.types import EmptyFamily, TimeSeries


def _normalized_off_diagonal(family, nu):
    squares = [teip(e, e, nu) for e in family]
    worst = 0.0
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            worst = max(worst, abs(teip(family[i], family[j], nu)) / math.sqrt(squares[i] * squares[j]))
    return worst


def test_spike_family_examples():
    assert spike_family(1) == [validate([(1, 0.0)])]
    family = spike_family(2, 1e-6)
    assert family[1] == validate([(1e-6, 0.0), (1, 0.1)])
    assert spike_family(2)[1].samples[0].value == (SMALLEST_POSITIVE,)


def test_spike_family_shape():
    family = spike_family(11)
    assert len(family) == 11
    for k, series in enumerate(family, 1):
        assert len(series) == k
        assert series.samples[-1].value == (1.0,)
        assert np.allclose(series.timestamps, np.arange(k) / 10)


def test_orthogonal_family_is_unchanged():
    family = [validate([(1, 0)]), validate([(2, 1), (-1, 2)]), validate([(3, 5)])]
    result = gram_schmidt(family, nu=1e6)
    assert result.basis == family
    assert result.dropped == []
    assert result.gram_residual == 0.0


def test_orthogonal_family_is_normalized():
    family = [validate([(3, 0)]), validate([(4, 1)])]
    result = gram_schmidt(family, nu=1e6, normalize=True)
    assert result.basis == [validate([(1, 0)]), validate([(1, 1)])]


def test_spike_family_orthogonalization_pattern():
    result = gram_schmidt(spike_family(11, 1e-6), nu=0.01)
    assert len(result.basis) == 11
    assert result.dropped == []
    assert result.gram_residual <= 1e-8
    for element in result.basis[1:]:
        values = element.values[:, 0]
        dominant = np.flatnonzero(np.abs(values) > 0.01 * np.max(np.abs(values)))
        # 每个原始尖峰被一个负尖峰和紧随其后的正尖峰代替
        assert len(dominant) == 2
        assert values[dominant[0]] < 0 < values[dominant[1]]


def test_random_families_are_orthogonalized():
    rng = np.random.default_rng(10)
    for _ in range(5):
        family = [random_series(rng, int(rng.integers(3, 9)), 2, integer_values=False) for _ in range(10)]
        result = gram_schmidt(family, nu=1.0)
        assert len(result.basis) == 10
        assert result.gram_residual <= 1e-8
        assert _normalized_off_diagonal(result.basis, 1.0) <= 1e-8


def test_span_is_preserved():
    rng = np.random.default_rng(21)
    family = [random_series(rng, int(rng.integers(2, 7)), 1, time_grid=20) for _ in range(6)]
    nu = 0.5
    result = gram_schmidt(family, nu=nu)
    assert result.dropped == []
    for series in family:
        coefficients = [teip(series, e, nu) / teip(e, e, nu) for e in result.basis]
        rebuilt = linear_combination(coefficients, result.basis)
        assert norm(ominus(series, rebuilt), nu) <= 1e-6 * norm(series, nu)


def test_dependent_series_is_dropped():
    a = validate([(1, 0), (2, 0.5)])
    result = gram_schmidt([a, otimes(2, a), validate([(1, 3)])], nu=1.0)
    assert result.dropped == [1]
    assert len(result.basis) == 2


def test_normalized_basis_has_unit_norm():
    rng = np.random.default_rng(4)
    family = [random_series(rng, 5, 1, integer_values=False) for _ in range(4)]
    result = gram_schmidt(family, nu=2.0, normalize=True)
    for element in result.basis:
        assert norm(element, 2.0) == pytest.approx(1.0, rel=1e-12)


def test_empty_family():
    with pytest.raises(EmptyFamily):
        gram_schmidt([])


def test_sincos_family_shape():
    family = sincos_family(128)
    assert len(family) == 128
    times = np.arange(128) / 128
    for series in family:
        assert len(series) == 128
        assert np.array_equal(series.timestamps, times)


def test_sincos_family_is_euclidean_orthogonal():
    family = sincos_family(128)
    matrix = np.array([s.values[:, 0] for s in family])
    products = matrix @ matrix.T
    scale = np.sqrt(np.outer(np.diag(products), np.diag(products)))
    off_diagonal = np.abs(products / scale - np.eye(len(family)))
    assert off_diagonal.max() <= 1e-6
    assert _normalized_off_diagonal(family[:16], 1e6) <= 1e-6


def test_sincos_family_is_not_teip_orthogonal():
    assert _normalized_off_diagonal(sincos_family(128)[:8], 0.01) > 1e-3


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
