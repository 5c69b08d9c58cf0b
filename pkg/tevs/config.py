"""
运行配置 - 从环境变量 (以及 load_env.py 加载的 .env) 读取默认参数
"""
import logging
import math
import os
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, TypeVar

from .series import SMALLEST_POSITIVE

T = TypeVar("T")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _read(env: Mapping[str, str], name: str, parse: Callable[[str], T], default: T) -> T:
    raw = env.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return parse(raw.strip())
    except ValueError as e:
        raise ValueError(f"环境变量 {name}={raw!r} 无法解析: {e}")


@dataclass(frozen=True)
class Settings:
    """默认参数，CLI 参数优先于这里的值"""
    nu: float = 0.01                          # 时间刚度
    epsilon: float = SMALLEST_POSITIVE        # sanitize 替换值
    max_concurrent: int = 1                   # 批量核值并发数
    log_level: str = "WARNING"

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu >= 0):
            raise ValueError(f"TEVS_NU 必须为有限非负数: {self.nu}")
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ValueError(f"TEVS_EPSILON 必须为有限正数: {self.epsilon}")
        if self.max_concurrent < 1:
            raise ValueError(f"TEVS_MAX_CONCURRENT 必须 ≥ 1: {self.max_concurrent}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"TEVS_LOG_LEVEL 必须是 {'/'.join(LOG_LEVELS)} 之一: {self.log_level}")

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None) -> "Settings":
        """读取 TEVS_NU / TEVS_EPSILON / TEVS_MAX_CONCURRENT / TEVS_LOG_LEVEL"""
        env = os.environ if env is None else env
        return cls(
            nu=_read(env, "TEVS_NU", float, cls.nu),
            epsilon=_read(env, "TEVS_EPSILON", float, cls.epsilon),
            max_concurrent=_read(env, "TEVS_MAX_CONCURRENT", int, cls.max_concurrent),
            log_level=_read(env, "TEVS_LOG_LEVEL", str.upper, cls.log_level),
        )
