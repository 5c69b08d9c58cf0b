#!/usr/bin/env python3
"""
Gram 矩阵与半正定检查测试
"""
import asyncio
import sys
import time

import numpy as np
import pytest

from tevs.kernel import BatchKernelEngine, gram, jacobi_eigenvalues, psd_check
from tevs.ortho import spike_family
from tevs.series import random_dataset, validate
from tevs.tep import teip
from tevs.types import AsymmetricInput, Dataset, EmptySeries, GramMatrix, KernelType, TimeSeries, ZeroNorm


def test_single_series_gram():
    matrix = gram(Dataset.of([validate([(2, 0), (1, 1)])]), KernelType.TEIP, nu=0.5)
    assert matrix.values.shape == (1, 1)
    assert matrix.values[0, 0] > 0


def test_gram_matches_pairwise_teip():
    rng = np.random.default_rng(1)
    dataset = random_dataset(rng, 6, max_length=10, dimension=2)
    matrix = gram(dataset, nu=0.3)
    assert matrix.labels == dataset.resolved_labels
    for i in range(6):
        for j in range(6):
            assert matrix.values[i, j] == matrix.values[j, i]
    for i in range(6):
        for j in range(i, 6):
            assert matrix.values[i, j] == teip(dataset.series[i], dataset.series[j], 0.3)


def test_spike_family_gram_is_psd():
    matrix = gram(spike_family(11, 1e-6), KernelType.TEIP, nu=0.01)
    eigenvalues = np.linalg.eigvalsh(matrix.values)
    assert eigenvalues.min() >= -1e-8 * np.abs(eigenvalues).max()
    assert psd_check(matrix).psd


def test_gaussian_gram_diagonal_is_one():
    rng = np.random.default_rng(2)
    dataset = random_dataset(rng, 8, max_length=12)
    matrix = gram(dataset, KernelType.GAUSSIAN_DISTANCE, nu=0.1, gamma=0.05)
    assert np.all(np.diag(matrix.values) == 1.0)
    assert np.all(matrix.values > 0.0)
    assert np.all(matrix.values <= 1.0)
    assert matrix.gamma == 0.05
    report = psd_check(matrix)
    assert isinstance(report.psd, bool)


def test_gaussian_gram_requires_gamma():
    with pytest.raises(ValueError):
        gram([validate([(1, 0)])], KernelType.GAUSSIAN_DISTANCE, nu=0.1)


def test_elastic_cosine_gram():
    rng = np.random.default_rng(3)
    matrix = gram(random_dataset(rng, 10, max_length=8, dimension=2), KernelType.ELASTIC_COSINE, nu=1.0)
    assert np.all(np.diag(matrix.values) == 1.0)
    assert np.all(np.abs(matrix.values) <= 1.0 + 1e-12)
    assert np.array_equal(matrix.values, matrix.values.T)
    with pytest.raises(EmptySeries):
        gram([validate([(1, 0)]), TimeSeries.omega(1)], KernelType.ELASTIC_COSINE)


def test_elastic_cosine_gram_rejects_zero_norm():
    balanced = validate([(1, 0.0), (-1, 1.0)], label="balanced")
    other = validate([(2, 0.0)], label="other")
    with pytest.raises(ZeroNorm) as info:
        gram([balanced, other], KernelType.ELASTIC_COSINE, nu=0.0)
    assert info.value.series == "balanced"
    matrix = gram([balanced, other], KernelType.ELASTIC_COSINE, nu=0.5)
    assert np.all(np.isfinite(matrix.values))


def test_psd_check_identity():
    report = psd_check(np.eye(3))
    assert report.psd
    assert report.min_eigenvalue == pytest.approx(1.0)


def test_psd_check_indefinite():
    report = psd_check(np.array([[1.0, 2.0], [2.0, 1.0]]))
    assert not report.psd
    assert report.min_eigenvalue == pytest.approx(-1.0)


def test_psd_check_rejects_asymmetric():
    with pytest.raises(AsymmetricInput):
        psd_check(np.array([[1.0, 2.0], [2.5, 1.0]]))


def test_psd_check_fills_gram_matrix():
    matrix = GramMatrix(values=np.array([[2.0, 1.0], [1.0, 2.0]]), labels=["a", "b"])
    psd_check(matrix)
    assert matrix.min_eigenvalue == pytest.approx(1.0)


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(4)
    for n in (1, 2, 5, 20, 40):
        x = rng.standard_normal((n, n))
        symmetric = (x + x.T) / 2
        expected = np.linalg.eigvalsh(symmetric)
        assert np.allclose(jacobi_eigenvalues(symmetric), expected, atol=1e-9 * max(1, np.abs(expected).max()))


def test_jacobi_zero_matrix():
    assert np.array_equal(jacobi_eigenvalues(np.zeros((3, 3))), np.zeros(3))


def test_random_teip_grams_are_psd():
    rng = np.random.default_rng(2024)
    nus = [0.0, 0.01, 1.0, 100.0]
    started = time.perf_counter()
    for trial in range(20):
        dataset = random_dataset(rng, 50, min_length=1, max_length=30,
                                 dimension=int(rng.integers(1, 4)), integer_values=bool(trial % 2))
        matrix = gram(dataset, KernelType.TEIP, nu=nus[trial % len(nus)])
        report = psd_check(matrix, tol=1e-8)
        assert report.psd, f"trial {trial}: λ_min={report.min_eigenvalue}"
        # ν=0 时 <A,A> = |Σa|² 可能为 0，留出舍入余量
        scale = max(1.0, float(np.abs(matrix.values).max()))
        diagonal = np.diag(matrix.values)
        assert np.all(diagonal >= -1e-9 * scale)
        bound = np.outer(np.clip(diagonal, 0, None), np.clip(diagonal, 0, None)) * (1 + 1e-9)
        assert np.all(matrix.values ** 2 <= bound + 1e-9 * scale ** 2)
    assert time.perf_counter() - started < 60


def test_concurrent_gram_is_bit_identical():
    rng = np.random.default_rng(5)
    dataset = random_dataset(rng, 12, max_length=15, dimension=2)
    sequential = gram(dataset, nu=0.2)
    concurrent = gram(dataset, nu=0.2, max_concurrent=4)
    assert np.array_equal(sequential.values, concurrent.values)


def test_batch_engine_keeps_input_order_and_raises():
    engine = BatchKernelEngine(max_concurrent=3)
    assert engine.evaluate([(i, 2) for i in range(10)], lambda a, b: a * b) == [2 * i for i in range(10)]

    def failing(a, b):
        if a == 4:
            raise ValueError("boom")
        return a

    with pytest.raises(ValueError):
        engine.evaluate([(i, 0) for i in range(8)], failing)


def test_batch_engine_inside_running_loop():
    engine = BatchKernelEngine(max_concurrent=3)
    pairs = [(i, 3) for i in range(10)]

    async def run():
        with pytest.raises(RuntimeError):
            engine.evaluate(pairs, lambda a, b: a * b)
        # 顺序模式不经过事件循环
        assert BatchKernelEngine(max_concurrent=1).evaluate(pairs, lambda a, b: a * b) == [3 * i for i in range(10)]
        return await engine.evaluate_batch(pairs, lambda a, b: a * b)

    assert asyncio.run(run()) == [3 * i for i in range(10)]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
