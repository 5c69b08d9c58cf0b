"""
向量空间运算 - U* 上的 ⊕ (按时间戳归并的加法) 与 ⊗ (数乘)

零向量样本 (0_S, t) 等同于空元素 Λ，任何运算结果中都不会保留。
浮点下的结合律只在中间和可精确表示时成立。
"""
import math
from typing import Iterable, Sequence

from .types import DimensionMismatch, NestedSample, NestedSeries, NonFiniteScalar, Sample, TimeSeries


def _check_dimension(a: TimeSeries, b: TimeSeries) -> None:
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"维度不一致: {a.dimension} vs {b.dimension}",
            series=b.label if b.label is not None else a.label)


def _is_null(value: Sequence[float]) -> bool:
    return all(v == 0.0 for v in value)


def otimes(lam: float, a: TimeSeries) -> TimeSeries:
    """
    数乘 λ ⊗ A：每个样本值乘以 λ，时间戳不变

    λ = 0 时返回 Ω；乘积下溢为零向量的样本同样被丢弃。
    """
    lam = float(lam)
    if not math.isfinite(lam):
        raise NonFiniteScalar(f"标量必须有限: {lam}", series=a.label)
    if lam == 0.0:
        return TimeSeries.omega(a.dimension)
    samples = []
    for sample in a.samples:
        value = tuple(lam * v for v in sample.value)
        if not _is_null(value):
            samples.append(Sample(value, sample.timestamp))
    return TimeSeries(tuple(samples), a.dimension)


def oplus(a: TimeSeries, b: TimeSeries) -> TimeSeries:
    """
    加法 A ⊕ B：双指针按时间戳归并

    时间戳较早的样本直接复制；时间戳相同则值相加，和恰为零向量时丢弃；
    一侧耗尽后追加另一侧的剩余样本。
    """
    _check_dimension(a, b)
    left, right = a.samples, b.samples
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        sa, sb = left[i], right[j]
        if sa.timestamp < sb.timestamp:
            merged.append(sa)
            i += 1
        elif sb.timestamp < sa.timestamp:
            merged.append(sb)
            j += 1
        else:
            total = tuple(x + y for x, y in zip(sa.value, sb.value))
            if not _is_null(total):
                merged.append(Sample(total, sa.timestamp))
            i += 1
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return TimeSeries(tuple(merged), a.dimension)


def ominus(a: TimeSeries, b: TimeSeries) -> TimeSeries:
    """减法 A ⊖ B = A ⊕ ((-1) ⊗ B)"""
    _check_dimension(a, b)
    return oplus(a, otimes(-1.0, b))


def linear_combination(coefficients: Iterable[float], family: Sequence[TimeSeries],
                       dimension: int = 1) -> TimeSeries:
    """⊕_k c_k ⊗ A_k，按下标顺序从左到右累加"""
    result = TimeSeries.omega(family[0].dimension if family else dimension)
    for coefficient, series in zip(coefficients, family):
        result = oplus(result, otimes(coefficient, series))
    return result


# ====== 嵌套序列：值本身是时间序列 ======

def nested_otimes(lam: float, a: NestedSeries) -> NestedSeries:
    """λ ⊗ A 作用到每个内层序列上，内层结果为 Ω 的样本被丢弃"""
    lam = float(lam)
    if not math.isfinite(lam):
        raise NonFiniteScalar(f"标量必须有限: {lam}", series=a.label)
    samples = []
    for sample in a.samples:
        value = otimes(lam, sample.value)
        if not value.is_empty:
            samples.append(NestedSample(value, sample.timestamp))
    return NestedSeries(tuple(samples), a.dimension)


def nested_oplus(a: NestedSeries, b: NestedSeries) -> NestedSeries:
    """外层按时间戳归并，同一时刻的内层序列用 ⊕ 相加，和为 Ω 时丢弃"""
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"内层维度不一致: {a.dimension} vs {b.dimension}",
            series=b.label if b.label is not None else a.label)
    left, right = a.samples, b.samples
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        sa, sb = left[i], right[j]
        if sa.timestamp < sb.timestamp:
            merged.append(sa)
            i += 1
        elif sb.timestamp < sa.timestamp:
            merged.append(sb)
            j += 1
        else:
            total = oplus(sa.value, sb.value)
            if not total.is_empty:
                merged.append(NestedSample(total, sa.timestamp))
            i += 1
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return NestedSeries(tuple(merged), a.dimension)
