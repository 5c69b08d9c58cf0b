"""
时间序列类型定义 - 样本、序列、数据集以及错误类型
所有结构构造后不可变，可在并发读者之间共享
"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np


# 错误类型定义
class TevsError(Exception):
    """时间弹性向量空间错误基类"""
    def __init__(self, message: str, series: Optional[Any] = None,
                 position: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.series = series        # 出错序列的标签或下标
        self.position = position    # 出错的行号 / 记录号 / 样本号

    def __str__(self) -> str:
        parts = [self.message]
        if self.series is not None:
            parts.append(f"series={self.series}")
        if self.position is not None:
            parts.append(f"position={self.position}")
        return " | ".join(parts)


class DataValidationError(TevsError):
    """输入数据不合法"""
    pass


class NonMonotoneTimestamps(DataValidationError):
    """时间戳重复或递减"""
    pass


class ZeroSpatialValue(DataValidationError):
    """样本值为零向量 0_S，序列不属于 U*"""
    pass


class DimensionMismatch(DataValidationError):
    """样本或序列的维度不一致"""
    pass


class ParseError(DataValidationError):
    """文件解析错误"""
    pass


class EmptySeries(DataValidationError):
    """需要非空序列的操作收到了 Ω"""
    pass


class EmptyFamily(DataValidationError):
    """正交化的输入序列族为空"""
    pass


class AsymmetricInput(DataValidationError):
    """矩阵不对称"""
    pass


class NonFiniteScalar(DataValidationError):
    """标量为 NaN 或无穷"""
    pass


class NumericError(TevsError):
    """数值计算失败"""
    pass


class NegativeSquare(NumericError):
    """自内积为负，说明核配置违反内积条件"""
    pass


class ZeroNorm(NumericError):
    """非空序列的范数为 0 (ν=0 时只是半正定)，无法归一化"""
    pass


class SizeLimitExceeded(NumericError):
    """输入超出朴素递归允许的规模"""
    pass


def _is_zero_vector(value: Sequence[float]) -> bool:
    # +0.0 与 -0.0 都按精确比较视为零
    return all(v == 0.0 for v in value)


@dataclass(frozen=True)
class Sample:
    """一个样本 (a(i), t_{a(i)})：空间值向量与时间戳"""
    value: Tuple[float, ...]
    timestamp: float

    def __post_init__(self):
        object.__setattr__(self, "value", tuple(float(v) for v in self.value))
        object.__setattr__(self, "timestamp", float(self.timestamp))
        if not self.value:
            raise DimensionMismatch("样本值至少需要一个坐标")
        if not math.isfinite(self.timestamp):
            raise DataValidationError(f"时间戳必须有限: {self.timestamp}")
        if _is_zero_vector(self.value):
            raise ZeroSpatialValue(f"样本值为零向量 (t={self.timestamp})")

    @property
    def dimension(self) -> int:
        return len(self.value)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {"t": self.timestamp, "v": list(self.value)}


@dataclass(frozen=True)
class TimeSeries:
    """
    离散时间序列 - U* 的元素

    samples 按时间戳严格递增；空序列即 Ω。
    """
    samples: Tuple[Sample, ...] = ()
    dimension: int = 1
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        if self.dimension < 1:
            raise DimensionMismatch(f"维度必须为正整数: {self.dimension}", series=self.label)
        previous = None
        for k, sample in enumerate(self.samples):
            if sample.dimension != self.dimension:
                raise DimensionMismatch(
                    f"样本维度 {sample.dimension} 与序列维度 {self.dimension} 不一致",
                    series=self.label, position=k)
            if previous is not None and not sample.timestamp > previous:
                raise NonMonotoneTimestamps(
                    f"时间戳未严格递增: {previous} -> {sample.timestamp}",
                    series=self.label, position=k)
            previous = sample.timestamp

    @classmethod
    def omega(cls, dimension: int = 1) -> "TimeSeries":
        """空序列 Ω"""
        return cls((), dimension)

    @classmethod
    def from_arrays(cls, values: Any, timestamps: Any,
                    label: Optional[str] = None) -> "TimeSeries":
        """由 (n, d) 值数组与 (n,) 时间戳数组构造序列"""
        array = np.asarray(values, dtype=float)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        times = np.asarray(timestamps, dtype=float).reshape(-1)
        if array.shape[0] != times.shape[0]:
            raise DimensionMismatch(
                f"值个数 {array.shape[0]} 与时间戳个数 {times.shape[0]} 不一致", series=label)
        dimension = array.shape[1] if array.shape[1] else 1
        samples = tuple(Sample(tuple(row), t) for row, t in zip(array.tolist(), times.tolist()))
        return cls(samples, dimension, label)

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    @property
    def is_empty(self) -> bool:
        return not self.samples

    @cached_property
    def values(self) -> np.ndarray:
        """(n, d) 值矩阵，只读"""
        array = np.array([s.value for s in self.samples], dtype=float).reshape(len(self.samples), self.dimension)
        array.setflags(write=False)
        return array

    @cached_property
    def timestamps(self) -> np.ndarray:
        """(n,) 时间戳向量，只读"""
        array = np.array([s.timestamp for s in self.samples], dtype=float)
        array.setflags(write=False)
        return array

    def with_label(self, label: Optional[str]) -> "TimeSeries":
        return TimeSeries(self.samples, self.dimension, label)


@dataclass(frozen=True)
class NestedSample:
    """嵌套样本：空间值本身是一条时间序列 (第二个时间弹性维度)"""
    value: TimeSeries
    timestamp: float

    def __post_init__(self):
        object.__setattr__(self, "timestamp", float(self.timestamp))
        if not math.isfinite(self.timestamp):
            raise DataValidationError(f"时间戳必须有限: {self.timestamp}")
        if self.value.is_empty:
            # 内层的零元是 Ω
            raise ZeroSpatialValue(f"嵌套样本的值为 Ω (t={self.timestamp})")

    @property
    def dimension(self) -> int:
        return self.value.dimension


@dataclass(frozen=True)
class NestedSeries:
    """
    值为时间序列的离散时间序列

    外层时间戳严格递增，内层序列共享维度 d；空序列即外层的 Ω。
    """
    samples: Tuple[NestedSample, ...] = ()
    dimension: int = 1
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        previous = None
        for k, sample in enumerate(self.samples):
            if sample.dimension != self.dimension:
                raise DimensionMismatch(
                    f"内层序列维度 {sample.dimension} 与 {self.dimension} 不一致",
                    series=self.label, position=k)
            if previous is not None and not sample.timestamp > previous:
                raise NonMonotoneTimestamps(
                    f"时间戳未严格递增: {previous} -> {sample.timestamp}",
                    series=self.label, position=k)
            previous = sample.timestamp

    @classmethod
    def of(cls, pairs: Sequence[Tuple[TimeSeries, float]], dimension: Optional[int] = None,
           label: Optional[str] = None) -> "NestedSeries":
        """由 (内层序列, 时间戳) 列表构造"""
        samples = tuple(NestedSample(value, t) for value, t in pairs)
        if dimension is None:
            dimension = samples[0].dimension if samples else 1
        return cls(samples, dimension, label)

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    @property
    def is_empty(self) -> bool:
        return not self.samples

    @cached_property
    def timestamps(self) -> np.ndarray:
        """(n,) 外层时间戳向量，只读"""
        array = np.array([s.timestamp for s in self.samples], dtype=float)
        array.setflags(write=False)
        return array


@dataclass(frozen=True)
class Dataset:
    """时间序列数据集，所有序列共享维度 d"""
    series: Tuple[TimeSeries, ...] = ()
    labels: Optional[Tuple[str, ...]] = None
    dimension: int = 1

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(self.series))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.series):
                raise DimensionMismatch(
                    f"标签数 {len(self.labels)} 与序列数 {len(self.series)} 不一致")
        for k, ts in enumerate(self.series):
            if ts.dimension != self.dimension:
                raise DimensionMismatch(
                    f"序列维度 {ts.dimension} 与数据集维度 {self.dimension} 不一致",
                    series=self.label_of(k), position=k)

    @classmethod
    def of(cls, series: Sequence[TimeSeries], labels: Optional[Sequence[str]] = None) -> "Dataset":
        """由序列列表构造数据集，维度取第一条序列的维度"""
        dimension = series[0].dimension if series else 1
        if labels is None and any(ts.label is not None for ts in series):
            labels = [ts.label if ts.label is not None else str(k) for k, ts in enumerate(series)]
        return cls(tuple(series), tuple(labels) if labels is not None else None, dimension)

    def __len__(self) -> int:
        return len(self.series)

    def __iter__(self):
        return iter(self.series)

    def label_of(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return str(index)

    @property
    def resolved_labels(self) -> List[str]:
        return [self.label_of(k) for k in range(len(self.series))]

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式 (JSON 文件格式)"""
        records = []
        for k, ts in enumerate(self.series):
            record: Dict[str, Any] = {"samples": [s.to_dict() for s in ts.samples]}
            if self.labels is not None:
                record = {"label": self.labels[k], **record}
            records.append(record)
        return {"d": self.dimension, "series": records}
