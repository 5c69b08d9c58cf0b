"""
BatchKernelEngine - 批量核值计算
两两核值互相独立，可以并发求值；结果顺序只由输入顺序决定
"""
import asyncio
import logging
from typing import Any, Callable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

Pair = Tuple[Any, Any]


def _running_loop():
    try:
        return asyncio.get_running_loop()
    except RuntimeError:
        return None


class BatchKernelEngine:
    """批量核值引擎 - 支持并发执行多个独立的 (A, B) 求值"""

    def __init__(self, max_concurrent: int = 1):
        """
        初始化批量引擎

        Args:
            max_concurrent: 最大并发数，≤ 1 时顺序执行
        """
        self.max_concurrent = max(1, int(max_concurrent))

    def evaluate(self, pairs: Sequence[Pair], fn: Callable[[Any, Any], float]) -> List[float]:
        """
        对每个 pair 求 fn(*pair)

        同步入口，并发时内部用 asyncio.run 驱动，不能在运行中的事件循环里调用；
        协程内请直接 await evaluate_batch(...)。

        Args:
            pairs: 参数对列表
            fn: 纯函数，相同输入给出相同输出

        Returns:
            List[float]: 与 pairs 一一对应的结果

        Raises:
            RuntimeError: 在运行中的事件循环里以并发模式调用
        """
        if self.max_concurrent == 1 or len(pairs) <= 1:
            return [fn(a, b) for a, b in pairs]
        if _running_loop() is not None:
            raise RuntimeError("事件循环运行中，请改用 await evaluate_batch(...)")
        return asyncio.run(self.evaluate_batch(pairs, fn))

    async def evaluate_batch(self, pairs: Sequence[Pair], fn: Callable[[Any, Any], float]) -> List[float]:
        """并发求值的异步入口，信号量限制同时运行的线程数"""
        # 信号量在事件循环内创建，每次 asyncio.run 都是新的循环
        semaphore = asyncio.Semaphore(self.max_concurrent)

        async def evaluate_single(pair: Pair) -> float:
            async with semaphore:
                return await asyncio.to_thread(fn, *pair)

        logger.debug(f"🚀 开始批量计算 {len(pairs)} 个核值，最大并发: {self.max_concurrent}")

        results = await asyncio.gather(*(evaluate_single(pair) for pair in pairs),
                                       return_exceptions=True)

        failures = [(i, r) for i, r in enumerate(results) if isinstance(r, BaseException)]
        for i, error in failures:
            logger.error(f"❌ 第 {i + 1} 个核值计算失败: {error}")
        if failures:
            raise failures[0][1]

        return list(results)
