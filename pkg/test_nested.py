#!/usr/bin/env python3
"""
嵌套序列测试 - 值为时间序列时的 ⊕ / ⊗ 与嵌套 teip
"""
import sys

import numpy as np
import pytest

from tevs.algebra import nested_oplus, nested_otimes
from tevs.kernel import psd_check
from tevs.series import random_series, validate
from tevs.tep import nested_teip, teip, tep, tep_naive
from tevs.types import (
    DataValidationError, DimensionMismatch, NestedSample, NestedSeries, NonMonotoneTimestamps, SpaceProduct,
    TepConfig, ZeroSpatialValue
)


def random_nested(rng: np.random.Generator, max_outer: int = 5, max_inner: int = 4,
                  dimension: int = 1, grid: int = 8) -> NestedSeries:
    """外层时间戳取自整数格点，内层为整数值随机序列"""
    length = int(rng.integers(0, max_outer + 1))
    times = np.sort(rng.choice(grid, size=length, replace=False)).astype(float)
    pairs = [(random_series(rng, int(rng.integers(1, max_inner + 1)), dimension, time_grid=6), t)
             for t in times]
    return NestedSeries.of(pairs, dimension=dimension)


def close(x: float, y: float, scale: float = 1.0) -> bool:
    return abs(x - y) <= 1e-9 * (1.0 + scale)


def test_nested_config():
    cfg = TepConfig.nested(0.2, 0.05)
    assert cfg.space_product == SpaceProduct.TEIP
    assert cfg.inner_nu == 0.05
    assert TepConfig.teip(0.2).space_product == SpaceProduct.DOT
    with pytest.raises(DataValidationError):
        TepConfig.nested(0.2, -1.0)


def test_single_sample_inner_series_reduce_to_teip():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = random_series(rng, int(rng.integers(1, 6)), time_grid=10)
        b = random_series(rng, int(rng.integers(1, 6)), time_grid=10)
        nested_a = NestedSeries.of([(validate([(v, 0.0)]), t) for v, t in zip(a.values, a.timestamps)])
        nested_b = NestedSeries.of([(validate([(v, 0.0)]), t) for v, t in zip(b.values, b.timestamps)])
        flat = teip(a, b, 0.3)
        assert close(nested_teip(nested_a, nested_b, 0.3, 5.0), flat, abs(flat))


def test_empty_nested_series_gives_zero():
    rng = np.random.default_rng(1)
    a = random_nested(rng)
    assert nested_teip(NestedSeries(), a) == 0.0
    assert nested_teip(a, NestedSeries()) == 0.0


def test_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(30):
        a, b = random_nested(rng), random_nested(rng)
        ab, ba = nested_teip(a, b, 0.1, 0.5), nested_teip(b, a, 0.1, 0.5)
        assert close(ab, ba, abs(ab))


def test_dp_matches_naive():
    rng = np.random.default_rng(5)
    cfg = TepConfig.nested(0.4, 0.2)
    for _ in range(30):
        a = random_nested(rng, max_outer=3, max_inner=3)
        b = random_nested(rng, max_outer=3, max_inner=3)
        dp, naive = tep(a, b, cfg), tep_naive(a, b, cfg)
        assert close(dp, naive, abs(naive))


def test_bilinearity():
    rng = np.random.default_rng(7)
    for _ in range(40):
        a, b, c = random_nested(rng), random_nested(rng), random_nested(rng)
        ac, bc = nested_teip(a, c, 0.2, 0.3), nested_teip(b, c, 0.2, 0.3)
        summed = nested_teip(nested_oplus(a, b), c, 0.2, 0.3)
        assert close(summed, ac + bc, abs(ac) + abs(bc))
        lam = float(rng.integers(-3, 4))
        scaled = nested_teip(nested_otimes(lam, a), c, 0.2, 0.3)
        assert close(scaled, lam * ac, abs(lam * ac))


def test_opposite_cancels_to_empty():
    rng = np.random.default_rng(9)
    for _ in range(20):
        a = random_nested(rng)
        assert nested_oplus(a, nested_otimes(-1, a)).is_empty
        assert nested_otimes(0, a).is_empty


def test_random_nested_gram_is_psd():
    rng = np.random.default_rng(13)
    dataset = [random_nested(rng, dimension=2) for _ in range(15)]
    size = len(dataset)
    matrix = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            matrix[i, j] = matrix[j, i] = nested_teip(dataset[i], dataset[j], 0.1, 0.5)
    report = psd_check(matrix, tol=1e-8)
    assert report.psd, f"λ_min={report.min_eigenvalue}"


def test_nested_validation():
    inner = validate([(1, 0.0), (2, 1.0)])
    with pytest.raises(NonMonotoneTimestamps):
        NestedSeries.of([(inner, 1.0), (inner, 1.0)])
    with pytest.raises(ZeroSpatialValue):
        NestedSample(validate([]), 0.0)
    with pytest.raises(DataValidationError):
        NestedSample(inner, float("nan"))
    wide = validate([([1, 2], 0.0)])
    with pytest.raises(DimensionMismatch):
        NestedSeries.of([(inner, 0.0), (wide, 1.0)])
    with pytest.raises(DimensionMismatch):
        nested_oplus(NestedSeries.of([(inner, 0.0)]), NestedSeries.of([(wide, 0.0)]))


def test_space_product_must_match_series_kind():
    inner = validate([(1, 0.0)])
    nested = NestedSeries.of([(inner, 0.0)])
    with pytest.raises(DataValidationError):
        tep(inner, inner, TepConfig.nested())
    with pytest.raises(DataValidationError):
        teip(nested, nested)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
