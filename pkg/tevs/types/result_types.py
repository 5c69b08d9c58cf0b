"""
算子配置与结果类型 - TEP 配置、正交化结果、Gram 矩阵、文本序列
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from .series_types import DataValidationError, NonFiniteScalar, TimeSeries


class Variant(str, Enum):
    """TEP 递归的实例类型"""
    TEIP = "teip"
    TWIP1 = "twip1"
    TWIP2 = "twip2"
    CUSTOM = "custom"


class TimeDistance(str, Enum):
    """时间距离 d(t, t')"""
    ABSOLUTE = "absolute"
    SQUARED = "squared"


class SpaceProduct(str, Enum):
    """空间乘积 f(a, b)：欧氏点积，或值为序列时的内层 teip"""
    DOT = "dot"
    TEIP = "teip"


class KernelType(str, Enum):
    """Gram 矩阵的核类型"""
    TEIP = "teip"
    GAUSSIAN_DISTANCE = "gaussian_distance"
    ELASTIC_COSINE = "elastic_cosine"


@dataclass(frozen=True)
class TepConfig:
    """
    时间弹性乘积的参数

    递归: M[i][j] = scale·(α·M[i-1][j] + β·M[i-1][j-1] + f·g + α·M[i][j-1])，
    边界 M[0][·] = M[·][0] = ξ，g(t, t') = exp(-ν·d(t, t'))。
    """
    alpha: float = 1.0
    beta: float = -1.0
    xi: float = 0.0
    nu: float = 0.01
    variant: Variant = Variant.TEIP
    time_distance: TimeDistance = TimeDistance.ABSOLUTE
    space_product: SpaceProduct = SpaceProduct.DOT
    scale: float = 1.0
    inner_nu: float = 0.01                 # space_product 为 teip 时内层的时间刚度

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "time_distance", TimeDistance(self.time_distance))
        object.__setattr__(self, "space_product", SpaceProduct(self.space_product))
        for name in ("alpha", "beta", "xi", "nu", "scale", "inner_nu"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NonFiniteScalar(f"{name} 必须有限: {value}")
        if self.nu < 0 or self.inner_nu < 0:
            raise DataValidationError(f"nu 必须非负: nu={self.nu}, inner_nu={self.inner_nu}")
        if self.variant == Variant.TEIP and (self.alpha, self.beta, self.xi, self.scale) != (1.0, -1.0, 0.0, 1.0):
            raise DataValidationError("teip 要求 alpha=1, beta=-1, xi=0 (不可覆盖)")

    @classmethod
    def teip(cls, nu: float = 0.01, time_distance: TimeDistance = TimeDistance.ABSOLUTE) -> "TepConfig":
        """唯一的时间弹性内积实例"""
        return cls(nu=nu, time_distance=time_distance)

    @classmethod
    def nested(cls, nu: float = 0.01, inner_nu: float = 0.01,
               time_distance: TimeDistance = TimeDistance.ABSOLUTE) -> "TepConfig":
        """嵌套 teip：f 本身是内层序列上的 teip"""
        return cls(nu=nu, time_distance=time_distance, space_product=SpaceProduct.TEIP, inner_nu=inner_nu)

    @classmethod
    def twip1(cls, nu: float = 0.01, time_distance: TimeDistance = TimeDistance.ABSOLUTE) -> "TepConfig":
        """三项等权平均的变体，前置因子 1/3"""
        return cls(alpha=1.0, beta=1.0, nu=nu, variant=Variant.TWIP1,
                   time_distance=time_distance, scale=1.0 / 3.0)

    @classmethod
    def twip2(cls, nu: float = 0.01, time_distance: TimeDistance = TimeDistance.ABSOLUTE) -> "TepConfig":
        """横向分支按 exp(-ν) 加权的变体，前置因子 1/(1+2·exp(-ν))"""
        lateral = math.exp(-nu)
        return cls(alpha=lateral, beta=1.0, nu=nu, variant=Variant.TWIP2,
                   time_distance=time_distance, scale=1.0 / (1.0 + 2.0 * lateral))

    @classmethod
    def custom(cls, alpha: float, beta: float, xi: float = 0.0, nu: float = 0.01,
               scale: float = 1.0, time_distance: TimeDistance = TimeDistance.ABSOLUTE) -> "TepConfig":
        """自由参数的实验配置，不作为内积使用"""
        return cls(alpha=alpha, beta=beta, xi=xi, nu=nu, variant=Variant.CUSTOM,
                   time_distance=time_distance, scale=scale)

    @property
    def is_inner_product(self) -> bool:
        return (self.alpha, self.beta, self.xi, self.scale) == (1.0, -1.0, 0.0, 1.0)


@dataclass
class OrthoResult:
    """Gram-Schmidt 正交化结果"""
    basis: List[TimeSeries] = field(default_factory=list)
    dropped: List[int] = field(default_factory=list)   # 数值相关而被剔除的输入下标
    gram_residual: float = 0.0                         # 归一化后的最大非对角内积
    passes: int = 0                                    # 实际执行的正交化轮数上限

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式 (不含基本身)"""
        return {
            "basis_size": len(self.basis),
            "dropped": list(self.dropped),
            "gram_residual": self.gram_residual,
            "passes": self.passes,
        }


@dataclass
class PsdReport:
    """半正定性检查结果"""
    psd: bool
    min_eigenvalue: float
    tol: float

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {"psd": self.psd, "min_eigenvalue": self.min_eigenvalue, "tol": self.tol}


@dataclass
class GramMatrix:
    """数据集上的两两核值矩阵"""
    values: np.ndarray
    labels: List[str]
    kernel_tag: KernelType = KernelType.TEIP
    nu: float = 0.01
    gamma: Optional[float] = None
    min_eigenvalue: Optional[float] = None   # 由 psd_check 填写

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "kernel": self.kernel_tag.value,
            "nu": self.nu,
            "gamma": self.gamma,
            "labels": list(self.labels),
            "values": self.values.tolist(),
        }


@dataclass(frozen=True)
class TokenSeries:
    """分词后的文档，时间戳为从 0 开始的词序号"""
    tokens: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def positions(self) -> np.ndarray:
        return np.arange(len(self.tokens), dtype=float)


@dataclass(frozen=True)
class IdfTable:
    """语料级逆文档频率表 idf(t) = ln(N / df(t))"""
    idf: Mapping[str, float] = field(default_factory=dict)
    doc_count: int = 0

    def weight(self, token: str) -> float:
        """未登录词按 df=1 处理，即 ln(N)"""
        if token in self.idf:
            return self.idf[token]
        return math.log(self.doc_count) if self.doc_count > 0 else 0.0
