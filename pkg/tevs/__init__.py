"""
tevs - 时间弹性向量空间
非均匀采样、变长离散时间序列上的 ⊕/⊗ 代数、时间弹性内积、正交化、核与文本匹配
"""

# 核心运算
from .algebra import oplus, otimes, ominus, linear_combination, nested_oplus, nested_otimes
from .tep import (
    tep, tep_naive, teip, nested_teip, twip1, twip2, product, norm, distance, elastic_cosine,
    is_uniform_equal_length, RestrictedValidityWarning
)
from .ortho import gram_schmidt, spike_family, sincos_family
from .kernel import gram, psd_check, jacobi_eigenvalues, BatchKernelEngine
from .textsim import tokenize, idf, teip_tm, rank, concept_series, concept_similarity

# 序列与数据
from .series import validate, sanitize, load, store, loads, dumps, load_corpus, random_dataset, SMALLEST_POSITIVE
from .types import (
    Sample, TimeSeries, NestedSample, NestedSeries, Dataset, TepConfig, Variant, TimeDistance,
    KernelType, SpaceProduct,
    OrthoResult, GramMatrix, PsdReport, TokenSeries, IdfTable,
    TevsError, DataValidationError, NumericError, ZeroNorm
)

# 配置
from .config import Settings

__all__ = [
    # 核心运算
    "oplus", "otimes", "ominus", "linear_combination", "nested_oplus", "nested_otimes",
    "tep", "tep_naive", "teip", "nested_teip", "twip1", "twip2", "product", "norm", "distance", "elastic_cosine",
    "is_uniform_equal_length", "RestrictedValidityWarning",
    "gram_schmidt", "spike_family", "sincos_family",
    "gram", "psd_check", "jacobi_eigenvalues", "BatchKernelEngine",
    "tokenize", "idf", "teip_tm", "rank", "concept_series", "concept_similarity",

    # 序列与数据
    "validate", "sanitize", "load", "store", "loads", "dumps", "load_corpus", "random_dataset",
    "SMALLEST_POSITIVE",
    "Sample", "TimeSeries", "NestedSample", "NestedSeries", "Dataset", "TepConfig", "Variant", "TimeDistance",
    "KernelType", "SpaceProduct",
    "OrthoResult", "GramMatrix", "PsdReport", "TokenSeries", "IdfTable",
    "TevsError", "DataValidationError", "NumericError", "ZeroNorm",

    # 配置
    "Settings"
]
