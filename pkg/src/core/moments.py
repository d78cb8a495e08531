#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
高斯乘积矩

E(X_i1 ... X_in) 按 Isserlis/Wick 配对求和：奇数个因子为 0，
偶数个因子为所有配对上协方差乘积之和。递归方式：第一个索引依次与
其余每个索引配对，乘以剩余索引的矩。
"""

import bisect
import logging
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple, Union

from src.core.combinat import enumerate_pairings
from src.core.polyalg import CovSymbol, Monomial, Poly
from src.errors import InvalidQueryError

logger = logging.getLogger(__name__)

IndexKey = Tuple[int, ...]


@dataclass(frozen=True)
class IndexList:
    """排序后的索引多重集"""

    indices: IndexKey

    @classmethod
    def of(cls, indices: Iterable[int]) -> "IndexList":
        values = tuple(sorted(int(i) for i in indices))
        if values and values[0] < 1:
            raise InvalidQueryError(f"索引必须为正整数: {values[0]}")
        return cls(values)

    def __len__(self) -> int:
        return len(self.indices)


IndexInput = Union[IndexList, Iterable[int]]


def _as_key(ix: IndexInput) -> IndexKey:
    if isinstance(ix, IndexList):
        return ix.indices
    return IndexList.of(ix).indices


def _times_symbol(poly: Poly, symbol: CovSymbol, factor: int, into: Dict[Monomial, int]) -> None:
    """into += factor * symbol * poly"""
    for mono, coeff in poly.items():
        factors = list(mono)
        bisect.insort(factors, symbol)
        key = tuple(factors)
        total = into.get(key, 0) + coeff * factor
        if total:
            into[key] = total
        else:
            into.pop(key, None)


def moment(ix: IndexInput) -> Poly:
    """
    不带缓存的参考实现，逐个位置配对递归

    a0 排序后，第一个元素与第 i 个元素配对，乘以删去这两者后的矩。
    """
    key = _as_key(ix)
    n = len(key)
    if n % 2 == 1:
        return Poly.zero()
    if n == 0:
        return Poly.one()
    if n == 2:
        return Poly.var(key[0], key[1])

    result: Dict[Monomial, int] = {}
    for i in range(1, n):
        rest = key[1:i] + key[i + 1 :]
        _times_symbol(moment(rest), CovSymbol.of(key[0], key[i]), 1, result)
    return Poly._wrap(result)


class MomentCache:
    """以排序索引元组为键的线程安全矩缓存"""

    def __init__(self):
        self._store: Dict[IndexKey, Poly] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: IndexKey) -> Optional[Poly]:
        with self._lock:
            found = self._store.get(key)
            if found is None:
                self.misses += 1
            else:
                self.hits += 1
            return found

    def put(self, key: IndexKey, value: Poly) -> None:
        with self._lock:
            self._store.setdefault(key, value)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {"entries": len(self._store), "hits": self.hits, "misses": self.misses}


DEFAULT_CACHE = MomentCache()


def _memo_moment(key: IndexKey, cache: MomentCache) -> Poly:
    n = len(key)
    if n % 2 == 1:
        return Poly.zero()
    if n == 0:
        return Poly.one()
    if n == 2:
        return Poly.var(key[0], key[1])

    cached = cache.get(key)
    if cached is not None:
        return cached

    # 相同取值的伙伴给出相同的剩余列表，按重数合并
    first = key[0]
    result: Dict[Monomial, int] = {}
    i = 1
    while i < n:
        value = key[i]
        j = i
        while j < n and key[j] == value:
            j += 1
        rest = key[1:i] + key[i + 1 :]
        _times_symbol(_memo_moment(rest, cache), CovSymbol.of(first, value), j - i, result)
        i = j

    poly = Poly._wrap(result)
    cache.put(key, poly)
    return poly


def moment_memoized(ix: IndexInput, cache: Optional[MomentCache] = None) -> Poly:
    """与 moment 结果相同，子列表只计算一次"""
    key = _as_key(ix)
    if cache is None:
        cache = DEFAULT_CACHE
    poly = _memo_moment(key, cache)
    logger.debug(f"矩计算完成: {len(poly)} 项", extra={"query": key, "terms": len(poly)})
    return poly


def moment_via_pairings(ix: IndexInput) -> Poly:
    """直接对位置的全部配对求和（独立校验路径）"""
    key = _as_key(ix)
    collected: Dict[Monomial, int] = {}
    for pairing in enumerate_pairings(range(len(key))):
        mono = tuple(sorted(CovSymbol.of(key[a], key[b]) for a, b in pairing.pairs))
        collected[mono] = collected.get(mono, 0) + 1
    return Poly._wrap(collected)
