"""
随机数据生成 - 供 CLI 的 gen random 与测试使用
"""
from typing import Optional

import numpy as np

from ..types import Dataset, TimeSeries


def random_series(rng: np.random.Generator, length: int, dimension: int = 1,
                  integer_values: bool = True, value_bound: int = 5,
                  time_grid: Optional[int] = None, label: Optional[str] = None) -> TimeSeries:
    """
    生成一条随机序列

    Args:
        rng: numpy 随机数生成器
        length: 样本个数
        dimension: 空间维度
        integer_values: True 时取 [-value_bound, value_bound] \\ {0} 中的整数
        value_bound: 整数取值界
        time_grid: 给定时时间戳取自 {0, ..., time_grid-1} (整数格点)，否则取 [0, 1) 上的随机实数
        label: 序列标签
    """
    if time_grid is not None:
        times = np.sort(rng.choice(time_grid, size=length, replace=False)).astype(float)
    else:
        times = np.unique(rng.random(length))
        while times.shape[0] < length:
            times = np.unique(np.concatenate([times, rng.random(length - times.shape[0])]))
    if integer_values:
        magnitudes = rng.integers(1, value_bound + 1, size=(length, dimension))
        signs = rng.choice([-1, 1], size=(length, dimension))
        values = (magnitudes * signs).astype(float)
    else:
        values = rng.standard_normal((length, dimension))
        values[values == 0.0] = 1.0
    return TimeSeries.from_arrays(values.reshape(length, dimension), times, label=label)


def random_dataset(rng: np.random.Generator, count: int, min_length: int = 1, max_length: int = 30,
                   dimension: int = 1, integer_values: bool = True, value_bound: int = 5,
                   time_grid: Optional[int] = None) -> Dataset:
    """生成 count 条长度在 [min_length, max_length] 内的随机序列"""
    series = []
    for k in range(count):
        length = int(rng.integers(min_length, max_length + 1))
        grid = max(time_grid, length) if time_grid is not None else None
        series.append(random_series(rng, length, dimension, integer_values, value_bound, grid, label=f"s{k}"))
    return Dataset.of(series)
