"""
数据类型定义
"""
from .series_types import (
    Sample, TimeSeries, NestedSample, NestedSeries, Dataset,
    TevsError, DataValidationError, NumericError,
    NonMonotoneTimestamps, ZeroSpatialValue, DimensionMismatch, ParseError,
    EmptySeries, EmptyFamily, AsymmetricInput, NonFiniteScalar,
    NegativeSquare, SizeLimitExceeded, ZeroNorm
)
from .result_types import (
    Variant, TimeDistance, SpaceProduct, KernelType, TepConfig,
    OrthoResult, PsdReport, GramMatrix, TokenSeries, IdfTable
)

__all__ = [
    "Sample", "TimeSeries", "NestedSample", "NestedSeries", "Dataset",
    "TevsError", "DataValidationError", "NumericError",
    "NonMonotoneTimestamps", "ZeroSpatialValue", "DimensionMismatch", "ParseError",
    "EmptySeries", "EmptyFamily", "AsymmetricInput", "NonFiniteScalar",
    "NegativeSquare", "SizeLimitExceeded", "ZeroNorm",
    "Variant", "TimeDistance", "SpaceProduct", "KernelType", "TepConfig",
    "OrthoResult", "PsdReport", "GramMatrix", "TokenSeries", "IdfTable"
]
