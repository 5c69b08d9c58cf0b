"""
TEP 模块 - 时间弹性乘积引擎与内积实例
"""
from .engine import tep, tep_naive, elastic_recursion, time_kernel, NAIVE_SIZE_LIMIT
from .products import (
    teip, nested_teip, twip1, twip2, product, norm, distance, elastic_cosine,
    is_uniform_equal_length, RestrictedValidityWarning
)

__all__ = [
    "tep", "tep_naive", "elastic_recursion", "time_kernel", "NAIVE_SIZE_LIMIT",
    "teip", "nested_teip", "twip1", "twip2", "product", "norm", "distance", "elastic_cosine",
    "is_uniform_equal_length", "RestrictedValidityWarning"
]
