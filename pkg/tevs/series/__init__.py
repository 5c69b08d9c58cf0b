"""
序列模块 - 校验、读写与随机生成
"""
from .validation import validate, sanitize, SMALLEST_POSITIVE
from .series_io import DataFormat, load, store, loads, dumps, load_corpus, infer_format
from .generators import random_series, random_dataset

__all__ = [
    "validate", "sanitize", "SMALLEST_POSITIVE",
    "DataFormat", "load", "store", "loads", "dumps", "load_corpus", "infer_format",
    "random_series", "random_dataset"
]
