"""
弹性文本匹配 - 分词、IDF、词位置上的 teip_tm 核与弹性余弦排序

文档看作以词序号为时间戳的序列；ν=0 时核退化为词袋向量的内积。
"""
import logging
import math
import re
from collections import Counter
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .kernel import BatchKernelEngine
from .tep import elastic_recursion, teip, time_kernel
from .types import EmptySeries, IdfTable, Sample, TimeSeries, TokenSeries

logger = logging.getLogger(__name__)

# 空白与标点 (含下划线) 都是分隔符
_SEPARATORS = re.compile(r"[\W_]+", re.UNICODE)


def tokenize(text: str) -> TokenSeries:
    """小写化后按 Unicode 空白与标点切分，丢弃空词"""
    return TokenSeries(tuple(token for token in _SEPARATORS.split(text.lower()) if token))


def idf(corpus: Sequence[TokenSeries]) -> IdfTable:
    """idf(t) = ln(N / df(t))，N 为文档数，df 为包含 t 的文档数"""
    document_frequency: Counter = Counter()
    for document in corpus:
        document_frequency.update(set(document.tokens))
    n = len(corpus)
    table = {token: math.log(n / df) for token, df in document_frequency.items()}
    return IdfTable(idf=table, doc_count=n)


def _weight_fn(weights: Optional[IdfTable]):
    if weights is None:
        return lambda token: 1.0
    return weights.weight


def teip_tm(a: TokenSeries, b: TokenSeries, nu: float = 0.01,
            weights: Optional[IdfTable] = None) -> float:
    """
    文本时间弹性内积

    局部项 δ(a_i, b_j)·exp(-ν|i-j|)，δ 为 [a_i = b_j] (weights 为 None) 或 IDF(a_i)·[a_i = b_j]。
    与数值序列共用同一个递归表 (α=1, β=-1, ξ=0)。
    """
    if len(a) < len(b):
        a, b = b, a
    if not len(a) or not len(b):
        return 0.0
    weight = _weight_fn(weights)
    vocabulary: Dict[str, int] = {}
    col_ids = np.array([vocabulary.setdefault(token, len(vocabulary)) for token in b.tokens])
    col_positions = b.positions

    def costs():
        for position, token in enumerate(a.tokens):
            token_id = vocabulary.get(token)
            if token_id is None:
                yield np.zeros(len(b))
                continue
            match = (col_ids == token_id) * weight(token)
            yield match * time_kernel(float(position), col_positions, nu)

    return elastic_recursion(costs(), len(b), alpha=1.0, beta=-1.0, xi=0.0)


def rank(query: TokenSeries, corpus: Sequence[TokenSeries], nu: float = 0.01,
         weights: Optional[IdfTable] = None, max_concurrent: int = 1) -> List[Tuple[int, float]]:
    """
    按弹性余弦对语料排序

    score = k(q, d) / (sqrt(k(q, q))·sqrt(k(d, d)))，空文档得 0；
    分数降序，同分按文档下标升序。

    Returns:
        List[Tuple[int, float]]: (文档下标, 分数)
    """
    if not len(query):
        raise EmptySeries("查询不能为空")
    engine = BatchKernelEngine(max_concurrent)
    query_norm = math.sqrt(teip_tm(query, query, nu, weights))

    def score(q: TokenSeries, document: TokenSeries) -> float:
        if not len(document):
            return 0.0
        self_product = teip_tm(document, document, nu, weights)
        if self_product <= 0.0 or query_norm == 0.0:
            return 0.0
        value = teip_tm(q, document, nu, weights) / (query_norm * math.sqrt(self_product))
        return min(1.0, max(0.0, value))

    scores = engine.evaluate([(query, document) for document in corpus], score)
    ranking = sorted(enumerate(scores), key=lambda item: (-item[1], item[0]))
    logger.info(f"📊 排序完成: {len(corpus)} 篇文档, nu={nu}, weights={'idf' if weights else 'binary'}")
    return ranking


def concept_series(document: TokenSeries, vectors: Mapping[str, Sequence[float]],
                   label: Optional[str] = None) -> TimeSeries:
    """
    把文档映射为概念向量序列：词 i 的值为其向量，时间戳为 i

    没有向量或向量为零的词等同于 Λ，直接跳过。得到的序列可直接交给 teip。
    """
    dimension = len(next(iter(vectors.values()))) if vectors else 1
    samples = []
    for position, token in enumerate(document.tokens):
        vector = vectors.get(token)
        if vector is None or all(v == 0.0 for v in vector):
            continue
        samples.append(Sample(tuple(vector), float(position)))
    return TimeSeries(tuple(samples), dimension, label)


def concept_similarity(a: TokenSeries, b: TokenSeries, vectors: Mapping[str, Sequence[float]],
                       nu: float = 0.01) -> float:
    """概念向量表示下的 teip"""
    return teip(concept_series(a, vectors), concept_series(b, vectors), nu)
