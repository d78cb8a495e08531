#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
乘积高斯变量的联合累积量

κ = Σ_划分 (-1)^(i-1) (i-1)! Π_块 μ(块内各分组索引拼接)

变量均已中心化，任何索引总数为奇数的块其矩为零，这样的划分直接跳过（剪枝）；
不剪枝的参考模式仅用于验证剪枝不改变结果。
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.config.defaults import DEFAULT_MAX_ORDER, STRUCTURAL_MAX_ORDER
from src.core.combinat import (
    Partition,
    enumerate_scheme_pairings,
    enumerate_set_partitions,
)
from src.core.moments import DEFAULT_CACHE, MomentCache, moment, moment_memoized
from src.core.polyalg import CovSymbol, Monomial, Poly, poly_add, poly_mul, poly_scale
from src.errors import InvalidQueryError, ResourceLimitError
from src.scheduler.pool import ordered_map, resolve_thread_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Group:
    """一个累积量参数：若干高斯变量的乘积（单元、双元、三元……）"""

    indices: Tuple[int, ...]

    @classmethod
    def of(cls, indices: Union[int, Iterable[int]]) -> "Group":
        if isinstance(indices, int):
            indices = (indices,)
        values = tuple(sorted(int(i) for i in indices))
        if not values:
            raise InvalidQueryError("分组不能为空")
        if values[0] < 1:
            raise InvalidQueryError(f"索引必须为正整数: {values[0]}")
        return cls(values)

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def is_singlet(self) -> bool:
        return len(self.indices) == 1


@dataclass(frozen=True)
class CumulantQuery:
    """有序的分组列表"""

    groups: Tuple[Group, ...]

    def __post_init__(self):
        if not self.groups:
            raise InvalidQueryError("累积量至少需要一个分组")

    @classmethod
    def of(cls, *groups: Union[int, Iterable[int], Group]) -> "CumulantQuery":
        """CumulantQuery.of(3, (1, 3), (1, 2, 3)) 形式的便捷构造"""
        return cls(tuple(g if isinstance(g, Group) else Group.of(g) for g in groups))

    @property
    def order(self) -> int:
        return len(self.groups)

    @property
    def total_indices(self) -> int:
        return sum(g.size for g in self.groups)

    def all_indices(self) -> List[int]:
        return [i for g in self.groups for i in g.indices]


def partition_coefficient(blocks: int) -> int:
    """(-1)^(i-1) (i-1)!"""
    return (-1) ** (blocks - 1) * math.factorial(blocks - 1)


def _block_indices(query: CumulantQuery, block: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(i for position in block for i in query.groups[position - 1].indices))


def _has_odd_block(query: CumulantQuery, partition: Partition) -> bool:
    return any(
        sum(query.groups[p - 1].size for p in block) % 2 == 1
        for block in partition.blocks
    )


class CumulantEngine:
    """
    划分公式求值器

    Args:
        max_order: 索引总数上限，超出抛出 ResourceLimitError
        threads: 划分循环的并行线程数（结果与线程数无关）
        pruned: 是否跳过含奇数索引块的划分
        memoize: 是否使用矩缓存
        cache: 指定矩缓存，默认使用模块级共享缓存
    """

    def __init__(
        self,
        max_order: int = DEFAULT_MAX_ORDER,
        threads: Optional[int] = 1,
        pruned: bool = True,
        memoize: bool = True,
        cache: Optional[MomentCache] = None,
    ):
        self.max_order = max_order
        self.threads = resolve_thread_count(threads)
        self.pruned = pruned
        self.memoize = memoize
        self.cache = cache

    def check_limit(self, total: int) -> None:
        if total > self.max_order:
            raise ResourceLimitError(
                f"索引总数 {total} 超过上限 {self.max_order}（可用 --max-order 调整）",
                limit=self.max_order,
            )

    def moment(self, indices: Iterable[int]) -> Poly:
        key = tuple(indices)
        self.check_limit(len(key))
        if self.memoize:
            return moment_memoized(key, self.cache)
        return moment(key)

    def _partition_term(self, query: CumulantQuery, partition: Partition) -> Poly:
        product = Poly.one()
        for block in partition.blocks:
            factor = self.moment(_block_indices(query, block))
            if factor.is_zero():
                return Poly.zero()
            product = poly_mul(product, factor)
        return poly_scale(product, partition_coefficient(partition.size))

    def cumulant(self, query: CumulantQuery) -> Poly:
        total = query.total_indices
        self.check_limit(total)
        if total % 2 == 1:
            return Poly.zero()

        partitions = []
        skipped = 0
        for partition in enumerate_set_partitions(query.order):
            if self.pruned and _has_odd_block(query, partition):
                skipped += 1
                continue
            partitions.append(partition)

        terms = ordered_map(
            lambda p: self._partition_term(query, p), partitions, self.threads
        )
        result = Poly.zero()
        for term in terms:
            result = poly_add(result, term)

        logger.debug(
            f"累积量完成: 划分 {len(partitions)} 个，剪枝 {skipped} 个，结果 {len(result)} 项",
            extra={"partitions": len(partitions), "terms": len(result)},
        )
        if self.memoize:
            cache = self.cache if self.cache is not None else DEFAULT_CACHE
            logger.debug(f"矩缓存: {cache.stats()}")
        return result


def cumulant(query: CumulantQuery, **settings) -> Poly:
    """按划分公式计算联合累积量，settings 透传给 CumulantEngine"""
    return CumulantEngine(**settings).cumulant(query)


def cumulant_doublets_direct(k: int) -> Poly:
    """
    双元 (1,2),(3,4),...,(2k-1,2k) 的累积量，直接对构造方案的配对求和

    k=1 时为 V_{1,2}。
    """
    if k < 1:
        raise InvalidQueryError(f"双元个数必须 >= 1，实际 {k}")
    if k == 1:
        return Poly.var(1, 2)
    return Poly.from_terms(
        (tuple(CovSymbol.of(a, b) for a, b in pairing.pairs), 1)
        for pairing in enumerate_scheme_pairings(k)
    )


@dataclass(frozen=True)
class MomentProduct:
    """累积量展开式中的一项：系数 × Π μ(blocks)"""

    coefficient: int
    blocks: Tuple[Tuple[int, ...], ...]


def moment_expansion(query: CumulantQuery) -> List[MomentProduct]:
    """
    把累积量写成矩乘积的带符号和

    索引拼接后相同的划分合并系数（如全同索引时 -10 μ{1,1,1} μ{1,1}）；
    含奇数块的项省略。排序：块数升序，再按块字典序。
    """
    if query.total_indices % 2 == 1:
        return []
    collected: Dict[Tuple[Tuple[int, ...], ...], int] = defaultdict(int)
    for partition in enumerate_set_partitions(query.order):
        if _has_odd_block(query, partition):
            continue
        blocks = tuple(sorted(_block_indices(query, b) for b in partition.blocks))
        collected[blocks] += partition_coefficient(partition.size)
    return [
        MomentProduct(coefficient, blocks)
        for blocks, coefficient in sorted(collected.items(), key=lambda kv: (len(kv[0]), kv[0]))
        if coefficient
    ]


@dataclass(frozen=True)
class ConjectureCheck:
    """单位系数猜想的检查结果"""

    holds: bool
    term_count: int
    witness: Optional[Tuple[Monomial, int]] = None


def check_unit_coefficient_conjecture(
    query: CumulantQuery, engine: Optional[CumulantEngine] = None
) -> ConjectureCheck:
    """
    索引互不相同时，累积量的每个系数是否都为 0 或 1

    失败时给出一个反例单项式及其系数。
    """
    indices = query.all_indices()
    if len(set(indices)) != len(indices):
        raise InvalidQueryError("猜想检查要求所有索引互不相同")
    poly = (engine or CumulantEngine()).cumulant(query)
    for mono, coeff in poly.sorted_terms():
        if coeff != 1:
            return ConjectureCheck(False, len(poly), (mono, coeff))
    return ConjectureCheck(True, len(poly))


def moments_to_cumulants_structural_check(order: int) -> Dict[Tuple[int, ...], int]:
    """
    按块大小形状汇总 order 元集合的划分：形状 -> Σ(-1)^(i-1)(i-1)!

    例如 order=5 时形状 (3, 2) 对应 -10。
    """
    if not 2 <= order <= STRUCTURAL_MAX_ORDER:
        raise InvalidQueryError(f"阶数必须在 2..{STRUCTURAL_MAX_ORDER} 之间，实际 {order}")
    totals: Dict[Tuple[int, ...], int] = defaultdict(int)
    for partition in enumerate_set_partitions(order):
        totals[partition.shape] += partition_coefficient(partition.size)
    return dict(sorted(totals.items(), key=lambda kv: (len(kv[0]), [-s for s in kv[0]])))
