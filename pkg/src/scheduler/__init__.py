# 调度模块
"""结果顺序与线程数无关的线程池"""

from src.scheduler.pool import default_thread_count, resolve_thread_count, ordered_map

__all__ = ["default_thread_count", "resolve_thread_count", "ordered_map"]
