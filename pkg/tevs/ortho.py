"""
Gram-Schmidt 正交化 - 在时间弹性内积下对序列族做经典 Gram-Schmidt，
以及两个实验用的基生成器 (尖峰族、正余弦族)
"""
import logging
import math
from typing import List, Sequence

import numpy as np

from .algebra import linear_combination, ominus, otimes
from .series import SMALLEST_POSITIVE, sanitize
from .tep import teip
from .types import DimensionMismatch, EmptyFamily, OrthoResult, TimeSeries

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10


def _normalized_residual(basis: Sequence[TimeSeries], nu: float) -> float:
    """max_{i≠j} |<e_i, e_j>| / sqrt(<e_i, e_i>·<e_j, e_j>)"""
    squares = [teip(e, e, nu) for e in basis]
    residual = 0.0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            value = abs(teip(basis[i], basis[j], nu)) / math.sqrt(squares[i] * squares[j])
            residual = max(residual, value)
    return residual


def _project_out(vector: TimeSeries, basis: Sequence[TimeSeries], squares: Sequence[float],
                 nu: float) -> TimeSeries:
    """经典 Gram-Schmidt：系数全部由同一个输入向量算出，再一次性减去"""
    coefficients = [teip(vector, e, nu) / s for e, s in zip(basis, squares)]
    return ominus(vector, linear_combination(coefficients, basis, vector.dimension))


def gram_schmidt(family: Sequence[TimeSeries], nu: float = 0.01, tol: float = DEFAULT_TOL,
                 normalize: bool = False, max_passes: int = 2) -> OrthoResult:
    """
    对序列族做 Gram-Schmidt 正交化

    e_1 = A_1；e_k = A_k ⊖ ⊕_{i<k} (<A_k, e_i>/<e_i, e_i>) ⊗ e_i。
    ||e_k|| ≤ tol·||A_k|| 的输入视为数值相关而剔除；
    投影后残差超过 tol 时再做一轮正交化 (最多 max_passes 轮)。

    Args:
        family: 输入序列族
        nu: 时间刚度
        tol: 相关性与正交性容差
        normalize: 是否把每个保留的 e_k 缩放为单位范数
        max_passes: 每个向量的最大投影轮数

    Returns:
        OrthoResult: 正交基、剔除下标、残差
    """
    if not family:
        raise EmptyFamily("正交化需要至少一条序列")
    dimension = family[0].dimension
    for k, series in enumerate(family):
        if series.dimension != dimension:
            raise DimensionMismatch(f"序列维度 {series.dimension} 与 {dimension} 不一致",
                                    series=series.label, position=k)

    basis: List[TimeSeries] = []
    squares: List[float] = []
    dropped: List[int] = []
    passes_used = 0
    for k, series in enumerate(family):
        original_square = teip(series, series, nu)
        candidate = series
        passes = 0
        if basis:
            for passes in range(1, max_passes + 1):
                candidate = _project_out(candidate, basis, squares, nu)
                candidate_square = teip(candidate, candidate, nu)
                if candidate_square <= 0.0:
                    break
                overlap = max(abs(teip(candidate, e, nu)) / math.sqrt(s * candidate_square)
                              for e, s in zip(basis, squares))
                if overlap <= tol:
                    break
                logger.debug(f"🔁 第 {k} 条序列重新正交化 (overlap={overlap:.3e})")
        passes_used = max(passes_used, passes)

        square = teip(candidate, candidate, nu)
        if candidate.is_empty or square <= (tol * tol) * original_square:
            logger.debug(f"🗑️ 第 {k} 条序列数值相关，已剔除")
            dropped.append(k)
            continue
        if normalize:
            candidate = otimes(1.0 / math.sqrt(square), candidate)
            square = teip(candidate, candidate, nu)
        basis.append(candidate.with_label(series.label))
        squares.append(square)

    residual = _normalized_residual(basis, nu)
    if residual > tol:
        logger.warning(f"⚠️ 正交化残差 {residual:.3e} 超过容差 {tol:.1e}")
    logger.info(f"✅ Gram-Schmidt 完成: {len(basis)} 个基向量, 剔除 {len(dropped)} 个")
    return OrthoResult(basis=basis, dropped=dropped, gram_residual=residual, passes=passes_used)


def spike_family(n: int, epsilon: float = SMALLEST_POSITIVE) -> List[TimeSeries]:
    """
    尖峰族：第 k 条序列 (1 ≤ k ≤ n) 在 0, 1/10, ..., (k-1)/10 采样，
    前 k-1 个样本值为 epsilon，最后一个为 1
    """
    if n < 1:
        raise ValueError(f"n 必须 ≥ 1: {n}")
    family = []
    for k in range(1, n + 1):
        raw = [(epsilon, i / 10) for i in range(k - 1)] + [(1.0, (k - 1) / 10)]
        family.append(sanitize(raw, epsilon=epsilon, label=f"spike{k}"))
    return family


def sincos_family(length: int, epsilon: float = SMALLEST_POSITIVE) -> List[TimeSeries]:
    """
    离散正余弦基：在 t = i/length 上采样的常数、sin(2πkt)/cos(2πkt) 对，
    length 为偶数时最后补上 Nyquist 余弦；恰为 0 的值替换为 epsilon
    """
    if length < 2:
        raise ValueError(f"length 必须 ≥ 2: {length}")
    t = np.arange(length) / length
    waves = [("const", np.ones(length))]
    for k in range(1, (length - 1) // 2 + 1):
        waves.append((f"cos{k}", np.cos(2 * np.pi * k * t)))
        waves.append((f"sin{k}", np.sin(2 * np.pi * k * t)))
    if length % 2 == 0:
        waves.append((f"cos{length // 2}", np.cos(np.pi * length * t)))
    return [sanitize(list(zip(wave.tolist(), t.tolist())), epsilon=epsilon, label=name)
            for name, wave in waves]
