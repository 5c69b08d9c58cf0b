"""
半正定性检查 - 循环 Jacobi 对称特征值求解
"""
import logging
import math
from typing import Union

import numpy as np

from ..types import AsymmetricInput, GramMatrix, PsdReport

logger = logging.getLogger(__name__)

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = JACOBI_TOL,
                       max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """
    循环 Jacobi 法求对称矩阵的全部特征值 (升序)

    按行循环扫描 (p, q)，每次旋转消去 a_pq，直到非对角 Frobenius 范数
    不超过 tol·||A||_F。
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n == 0:
        return np.empty(0)
    if scale == 0.0:
        return np.zeros(n)

    for sweep in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            logger.debug(f"🔄 Jacobi 在第 {sweep} 轮收敛 (off={off:.3e})")
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        logger.warning(f"⚠️ Jacobi 未在 {max_sweeps} 轮内收敛")

    return np.sort(np.diag(a))


def psd_check(gram: Union[GramMatrix, np.ndarray], tol: float = 1e-8) -> PsdReport:
    """
    检查矩阵是否半正定

    psd ⇔ λ_min ≥ -tol·max(1, ||K||_2)。传入 GramMatrix 时回填其 min_eigenvalue。

    Raises:
        AsymmetricInput: 矩阵不是精确对称的方阵
    """
    values = gram.values if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise AsymmetricInput(f"需要方阵，实际形状 {values.shape}")
    if np.any(values != values.T):
        i, j = np.argwhere(values != values.T)[0]
        raise AsymmetricInput(f"矩阵不对称: K[{i}][{j}]={values[i, j]} ≠ K[{j}][{i}]={values[j, i]}")

    eigenvalues = jacobi_eigenvalues(values)
    if eigenvalues.size == 0:
        return PsdReport(psd=True, min_eigenvalue=0.0, tol=tol)
    min_eigenvalue = float(eigenvalues[0])
    spectral_norm = float(np.max(np.abs(eigenvalues)))
    psd = min_eigenvalue >= -tol * max(1.0, spectral_norm)

    if isinstance(gram, GramMatrix):
        gram.min_eigenvalue = min_eigenvalue
    logger.info(f"{'✅' if psd else '❌'} PSD 检查: λ_min={min_eigenvalue:.6e}, ||K||_2={spectral_norm:.6e}")
    return PsdReport(psd=psd, min_eigenvalue=min_eigenvalue, tol=tol)
