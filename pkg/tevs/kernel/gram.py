"""
Gram 矩阵构建 - teip 核、弹性距离高斯核、弹性余弦核
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..tep import distance, teip
from ..types import Dataset, EmptySeries, GramMatrix, KernelType, TimeSeries, ZeroNorm
from .batch_engine import BatchKernelEngine

logger = logging.getLogger(__name__)


def _upper_pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def gram(dataset: Union[Dataset, Sequence[TimeSeries]], kernel_tag: KernelType = KernelType.TEIP,
         nu: float = 0.01, gamma: Optional[float] = None, max_concurrent: int = 1) -> GramMatrix:
    """
    构建两两核值矩阵，每个无序对只计算一次，保证精确对称

    Args:
        dataset: 数据集或序列列表
        kernel_tag: teip / gaussian_distance / elastic_cosine
        nu: 时间刚度
        gamma: 高斯核带宽，kernel_tag 为 gaussian_distance 时必填
        max_concurrent: 并发求值的线程数

    Returns:
        GramMatrix: 核矩阵
    """
    kernel_tag = KernelType(kernel_tag)
    if not isinstance(dataset, Dataset):
        dataset = Dataset.of(list(dataset))
    series = list(dataset.series)
    labels = dataset.resolved_labels
    n = len(series)
    if kernel_tag == KernelType.GAUSSIAN_DISTANCE and (gamma is None or not gamma > 0):
        raise ValueError(f"gaussian_distance 核需要正的 gamma，实际为 {gamma}")

    logger.info(f"🧮 构建 Gram 矩阵: {n} 条序列, kernel={kernel_tag.value}, nu={nu}")
    pairs = _upper_pairs(n)
    engine = BatchKernelEngine(max_concurrent)

    if kernel_tag == KernelType.GAUSSIAN_DISTANCE:
        def kernel(i: int, j: int) -> float:
            return math.exp(-gamma * distance(series[i], series[j], nu) ** 2)
    else:
        def kernel(i: int, j: int) -> float:
            return teip(series[i], series[j], nu)

    results = engine.evaluate(pairs, kernel)
    values = np.empty((n, n), dtype=float)
    for (i, j), value in zip(pairs, results):
        values[i, j] = values[j, i] = value

    if kernel_tag == KernelType.ELASTIC_COSINE:
        empty = [labels[k] for k, s in enumerate(series) if s.is_empty]
        if empty:
            raise EmptySeries("弹性余弦核要求非空序列", series=empty[0])
        degenerate = [labels[k] for k in range(n) if not values[k, k] > 0.0]
        if degenerate:
            raise ZeroNorm(f"弹性余弦核要求范数为正 (nu={nu})", series=degenerate[0])
        norms = np.sqrt(np.diag(values))
        values = values / np.outer(norms, norms)
        np.fill_diagonal(values, 1.0)

    logger.info(f"✅ Gram 矩阵构建完成: {n}x{n}")
    return GramMatrix(values=values, labels=labels, kernel_tag=kernel_tag, nu=nu,
                      gamma=gamma if kernel_tag == KernelType.GAUSSIAN_DISTANCE else None)
