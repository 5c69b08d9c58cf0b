"""
核模块 - Gram 矩阵构建、半正定检查与批量求值
"""
from .batch_engine import BatchKernelEngine
from .gram import gram
from .psd import psd_check, jacobi_eigenvalues

__all__ = ["BatchKernelEngine", "gram", "psd_check", "jacobi_eigenvalues"]
