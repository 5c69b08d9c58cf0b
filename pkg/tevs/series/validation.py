"""
序列校验 - 把原始 (值, 时间戳) 列表转换为 U* 中的时间序列
"""
import logging
import math
from numbers import Real
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from ..types import (
    DataValidationError, DimensionMismatch, NonMonotoneTimestamps,
    Sample, TimeSeries, ZeroSpatialValue
)

logger = logging.getLogger(__name__)

# 最小的正次正规数 2^-1074
SMALLEST_POSITIVE = math.ldexp(1.0, -1074)

RawSample = Tuple[Any, float]


def _as_vector(value: Any) -> Tuple[float, ...]:
    if isinstance(value, Real):
        return (float(value),)
    return tuple(float(v) for v in value)


def _normalize(raw: Iterable[RawSample], label: Optional[str]) -> List[Tuple[Tuple[float, ...], float]]:
    rows = []
    for k, item in enumerate(raw):
        if isinstance(item, Sample):
            rows.append((item.value, item.timestamp))
            continue
        try:
            value, timestamp = item
            rows.append((_as_vector(value), float(timestamp)))
        except (TypeError, ValueError) as e:
            raise DataValidationError(f"无法解析样本: {item!r} ({e})", series=label, position=k)
    return rows


def _build(rows: Sequence[Tuple[Tuple[float, ...], float]], dimension: Optional[int],
           label: Optional[str]) -> TimeSeries:
    if dimension is None:
        dimension = len(rows[0][0]) if rows else 1
    samples = []
    previous = None
    for k, (value, timestamp) in enumerate(rows):
        if len(value) != dimension:
            raise DimensionMismatch(
                f"样本维度 {len(value)} 与期望维度 {dimension} 不一致", series=label, position=k)
        if not math.isfinite(timestamp) or not all(math.isfinite(v) for v in value):
            raise DataValidationError(f"样本含非有限值: {value} @ {timestamp}", series=label, position=k)
        if previous is not None and not timestamp > previous:
            raise NonMonotoneTimestamps(
                f"时间戳未严格递增: {previous} -> {timestamp}", series=label, position=k)
        if all(v == 0.0 for v in value):
            raise ZeroSpatialValue(f"样本值为零向量 (t={timestamp})", series=label, position=k)
        samples.append(Sample(value, timestamp))
        previous = timestamp
    return TimeSeries(tuple(samples), dimension, label)


def validate(raw: Iterable[RawSample], dimension: Optional[int] = None,
             label: Optional[str] = None) -> TimeSeries:
    """
    校验原始样本列表并构造时间序列

    不做任何排序；时间戳必须严格递增，样本值不能是零向量。

    Args:
        raw: (值, 时间戳) 序列，值可以是标量或向量
        dimension: 期望维度，None 时取第一个样本的维度
        label: 序列标签，用于错误信息

    Returns:
        TimeSeries: U* 中的序列
    """
    return _build(_normalize(raw, label), dimension, label)


def sanitize(raw: Iterable[RawSample], epsilon: float = SMALLEST_POSITIVE,
             dimension: Optional[int] = None, label: Optional[str] = None) -> TimeSeries:
    """
    把精确等于 0 的坐标替换为 epsilon，然后校验

    Args:
        raw: (值, 时间戳) 序列
        epsilon: 替换值，默认 2^-1074
        dimension: 期望维度
        label: 序列标签

    Returns:
        TimeSeries: U* 中的序列
    """
    if not (epsilon > 0 and math.isfinite(epsilon)):
        raise DataValidationError(f"epsilon 必须为有限正数: {epsilon}", series=label)
    rows = _normalize(raw, label)
    replaced = 0
    cleaned = []
    for value, timestamp in rows:
        new_value = tuple(epsilon if v == 0.0 else v for v in value)
        replaced += sum(1 for v in value if v == 0.0)
        cleaned.append((new_value, timestamp))
    if replaced:
        logger.debug(f"🧹 序列 {label!r}: {replaced} 个零坐标替换为 {epsilon!r}")
    return _build(cleaned, dimension, label)
