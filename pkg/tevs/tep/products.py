"""
内积实例与诱导几何 - teip、twip1/twip2、范数、距离、弹性余弦
"""
import logging
import math
import warnings

import numpy as np

from ..algebra import ominus
from ..types import EmptySeries, NegativeSquare, NestedSeries, TepConfig, TimeSeries, Variant, ZeroNorm
from .engine import tep

logger = logging.getLogger(__name__)

ROUNDING_SLACK = 64 * np.finfo(float).eps


class RestrictedValidityWarning(UserWarning):
    """twip 变体只在等长、同采样的序列上保证内积性质"""
    pass


def is_uniform_equal_length(a: TimeSeries, b: TimeSeries) -> bool:
    """两条序列等长、时间戳相同且等间隔"""
    if len(a) != len(b):
        return False
    if not np.array_equal(a.timestamps, b.timestamps):
        return False
    if len(a) < 3:
        return True
    steps = np.diff(a.timestamps)
    return bool(np.allclose(steps, steps[0], rtol=1e-9, atol=0.0))


def teip(a: TimeSeries, b: TimeSeries, nu: float = 0.01) -> float:
    """
    时间弹性内积：α=1, β=-1, ξ=0, f 为欧氏点积, g = exp(-ν|t-t'|)

    数学上等于 Σ_i Σ_j <a_i, b_j>·exp(-ν|t_ai - t_bj|)，这里按递归表求值。
    """
    return tep(a, b, TepConfig.teip(nu))


def nested_teip(a: NestedSeries, b: NestedSeries, nu: float = 0.01, inner_nu: float = 0.01) -> float:
    """
    嵌套序列上的 teip：外层局部项为内层序列的 teip(inner_nu)，再乘外层时间核 exp(-ν·d)

    内层 teip 是半正定内积，外层按同样的递归求和，整体仍关于 ⊕ 与 ⊗ 双线性。
    """
    return tep(a, b, TepConfig.nested(nu, inner_nu))


def _restricted_product(a: TimeSeries, b: TimeSeries, cfg: TepConfig) -> float:
    if not is_uniform_equal_length(a, b):
        warnings.warn(
            f"{cfg.variant.value} 的内积性质只在等长同采样序列上成立 (|A|={len(a)}, |B|={len(b)})",
            RestrictedValidityWarning, stacklevel=3)
    return tep(a, b, cfg)


def twip1(a: TimeSeries, b: TimeSeries, nu: float = 0.01) -> float:
    """前置因子 1/3 的三分支平均乘积"""
    return _restricted_product(a, b, TepConfig.twip1(nu))


def twip2(a: TimeSeries, b: TimeSeries, nu: float = 0.01) -> float:
    """横向分支按 exp(-ν) 加权、前置因子 1/(1+2·exp(-ν)) 的乘积；ν→∞ 时趋于欧氏内积"""
    return _restricted_product(a, b, TepConfig.twip2(nu))


def product(a: TimeSeries, b: TimeSeries, nu: float = 0.01, variant: Variant = Variant.TEIP) -> float:
    """按变体名分派"""
    variant = Variant(variant)
    if variant == Variant.TEIP:
        return teip(a, b, nu)
    if variant == Variant.TWIP1:
        return twip1(a, b, nu)
    if variant == Variant.TWIP2:
        return twip2(a, b, nu)
    raise ValueError("custom 变体需要显式的 TepConfig，请直接调用 tep()")


def norm(a: TimeSeries, nu: float = 0.01) -> float:
    """诱导范数 ||A|| = sqrt(<A, A>)，舍入量级内的负值按 0 处理"""
    square = teip(a, a, nu)
    if square >= 0:
        return math.sqrt(square)
    # |Σ_ij <a_i, a_j>·g| ≤ n·Σ|a_i|²
    bound = len(a) * float(np.sum(a.values * a.values)) if not a.is_empty else 0.0
    if square >= -ROUNDING_SLACK * bound:
        return 0.0
    raise NegativeSquare(f"<A, A> = {square} < 0", series=a.label)


def distance(a: TimeSeries, b: TimeSeries, nu: float = 0.01) -> float:
    """弹性距离 ||A ⊖ B||"""
    return norm(ominus(a, b), nu)


def elastic_cosine(a: TimeSeries, b: TimeSeries, nu: float = 0.01) -> float:
    """弹性余弦 <A, B> / (||A||·||B||)"""
    if a.is_empty or b.is_empty:
        raise EmptySeries("弹性余弦要求两条非空序列",
                          series=a.label if a.is_empty else b.label)
    norm_a, norm_b = norm(a, nu), norm(b, nu)
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroNorm(f"范数为 0，弹性余弦无定义 (nu={nu})",
                       series=a.label if norm_a == 0.0 else b.label)
    return teip(a, b, nu) / (norm_a * norm_b)
