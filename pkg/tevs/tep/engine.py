"""
时间弹性乘积引擎 - 递归式的动态规划求值与朴素递归对照

M[i][j] = scale·(α·M[i-1][j] + β·M[i-1][j-1] + f(a_i, b_j)·g(t_ai, t_bj) + α·M[i][j-1])
M[0][·] = M[·][0] = ξ
"""
import logging
import math
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

import numpy as np
from scipy.signal import lfilter

from ..types import (
    DataValidationError, DimensionMismatch, NestedSeries, SizeLimitExceeded, SpaceProduct, TepConfig,
    TimeDistance, TimeSeries
)

logger = logging.getLogger(__name__)

NAIVE_SIZE_LIMIT = 24

AnySeries = Union[TimeSeries, NestedSeries]


def time_distances(t: float, others: np.ndarray, distance: TimeDistance) -> np.ndarray:
    """d(t, t') 对一组 t' 求值"""
    gap = np.abs(others - t)
    if distance == TimeDistance.SQUARED:
        return gap * gap
    return gap


def time_kernel(t: float, others: np.ndarray, nu: float,
                distance: TimeDistance = TimeDistance.ABSOLUTE) -> np.ndarray:
    """g(t, t') = exp(-ν·d(t, t'))"""
    return np.exp(-nu * time_distances(t, others, distance))


def elastic_recursion(row_costs: Iterable[np.ndarray], n_cols: int, alpha: float, beta: float,
                      xi: float, scale: float = 1.0) -> float:
    """
    按行滚动求解递归表，内存 O(n_cols)

    行内递推 M[i][j] = D[j] + scale·α·M[i][j-1] 是一阶线性递推，
    scale·α = 1 时即累加和，否则交给 lfilter。

    Args:
        row_costs: 每行的局部项 f·g，长度均为 n_cols
        n_cols: 列数
        alpha, beta, xi, scale: 递归常数

    Returns:
        float: M[n_rows][n_cols]，没有行或没有列时为 ξ
    """
    previous = np.full(n_cols + 1, xi, dtype=float)
    current = np.empty_like(previous)
    lateral = scale * alpha
    for cost in row_costs:
        drive = scale * (alpha * previous[1:] + beta * previous[:-1] + cost)
        current[0] = xi
        if lateral == 1.0:
            np.cumsum(drive, out=current[1:])
            if xi != 0.0:
                current[1:] += xi
        else:
            current[1:] = lfilter([1.0], [1.0, -lateral], drive, zi=[lateral * xi])[0]
        previous, current = current, previous
    return float(previous[-1])


def _check_pair(a: AnySeries, b: AnySeries, cfg: TepConfig) -> None:
    expected = NestedSeries if cfg.space_product == SpaceProduct.TEIP else TimeSeries
    if not (isinstance(a, expected) and isinstance(b, expected)):
        raise DataValidationError(
            f"space_product={cfg.space_product.value} 需要 {expected.__name__}，"
            f"实际为 {type(a).__name__} / {type(b).__name__}")
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"维度不一致: {a.dimension} vs {b.dimension}",
                                series=b.label if b.label is not None else a.label)


def _row_costs(a: AnySeries, b: AnySeries, cfg: TepConfig) -> Iterator[np.ndarray]:
    """逐行给出局部项 f(a_i, b_j)·g(t_ai, t_bj)"""
    col_times = b.timestamps
    if cfg.space_product == SpaceProduct.TEIP:
        inner = TepConfig.teip(cfg.inner_nu, cfg.time_distance)
        for sample in a.samples:
            products = np.array([tep(sample.value, other.value, inner) for other in b.samples])
            yield products * time_kernel(sample.timestamp, col_times, cfg.nu, cfg.time_distance)
        return
    col_values = b.values
    for value, t in zip(a.values, a.timestamps):
        yield (col_values @ value) * time_kernel(t, col_times, cfg.nu, cfg.time_distance)


def tep(a: AnySeries, b: AnySeries, cfg: TepConfig) -> float:
    """
    时间弹性乘积 <A, B>_tep 的动态规划求值，复杂度 O(|A|·|B|)

    行取较长的序列、列取较短的序列，f 与 g 对称，结果不受交换影响。
    space_product 为 teip 时输入是 NestedSeries，f 为内层序列上的 teip。
    """
    _check_pair(a, b, cfg)
    if len(a) < len(b):
        a, b = b, a
    if a.is_empty or b.is_empty:
        return cfg.xi
    return elastic_recursion(_row_costs(a, b, cfg), len(b), cfg.alpha, cfg.beta, cfg.xi, cfg.scale)


def tep_naive(a: AnySeries, b: AnySeries, cfg: TepConfig,
              max_total: int = NAIVE_SIZE_LIMIT) -> float:
    """
    递归式的逐字自顶向下求值 (带记忆化)，作为动态规划的对照

    Raises:
        SizeLimitExceeded: |A| + |B| 超过 max_total
    """
    _check_pair(a, b, cfg)
    if len(a) + len(b) > max_total:
        raise SizeLimitExceeded(f"|A|+|B| = {len(a) + len(b)} 超过上限 {max_total}")
    left: Sequence = a.samples
    right: Sequence = b.samples

    def local(p: int, q: int) -> float:
        sa, sb = left[p - 1], right[q - 1]
        if cfg.space_product == SpaceProduct.TEIP:
            product = tep_naive(sa.value, sb.value, TepConfig.teip(cfg.inner_nu, cfg.time_distance), max_total)
        else:
            product = sum(x * y for x, y in zip(sa.value, sb.value))
        gap = abs(sa.timestamp - sb.timestamp)
        if cfg.time_distance == TimeDistance.SQUARED:
            gap = gap * gap
        return product * math.exp(-cfg.nu * gap)

    @lru_cache(maxsize=None)
    def m(p: int, q: int) -> float:
        if p == 0 or q == 0:
            return cfg.xi
        return cfg.scale * (cfg.alpha * m(p - 1, q) + cfg.beta * m(p - 1, q - 1)
                            + local(p, q) + cfg.alpha * m(p, q - 1))

    return m(len(left), len(right))
