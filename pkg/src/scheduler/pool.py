#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
线程池调度

引擎内部的并行（划分循环、蒙特卡洛分片）统一经由这里：
结果按输入顺序返回，累加顺序因此与线程数无关。
"""

import os
import logging
import concurrent.futures
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def default_thread_count() -> int:
    """默认线程数：min(4, CPU 核数)"""
    return max(1, min(4, os.cpu_count() or 1))


def resolve_thread_count(value: Optional[int]) -> int:
    """None/0 表示使用默认值；负数视为 1"""
    if not value:
        return default_thread_count()
    return max(1, int(value))


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """
    并行执行 func，结果与 items 一一对应

    threads <= 1 或任务不足两个时直接串行执行。
    """
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]

    workers = min(threads, len(items))
    logger.debug(f"线程池执行 {len(items)} 个任务，线程数 {workers}")
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
