#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
组合枚举模块

完美配对（pairing）与集合划分（set partition）的确定性惰性枚举，
以及双元累积量的"固定-置换-翻转-平移"构造方案。

配对作用在 *位置* 上而不是索引值上，重复索引（如 1,1,2,2）由 polyalg 在值层面合并。
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from src.errors import InvalidQueryError


Pair = Tuple[int, int]


def double_factorial(n: int) -> int:
    """n!!，n <= 0 时为 1"""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


@dataclass(frozen=True)
class Pairing:
    """
    一个完美配对

    pairs 为规范形式：对内位置升序，各对按首位置升序。
    """

    pairs: Tuple[Pair, ...]

    @classmethod
    def canonical(cls, pairs: Sequence[Sequence[int]]) -> "Pairing":
        normalized = []
        for pair in pairs:
            a, b = pair
            normalized.append((a, b) if a <= b else (b, a))
        normalized.sort()
        return cls(tuple(normalized))

    def positions(self) -> List[int]:
        return sorted(p for pair in self.pairs for p in pair)

    def contains_any(self, pairs: Sequence[Pair]) -> bool:
        """是否包含给定的任一（无序）对"""
        own = set(self.pairs)
        return any((min(a, b), max(a, b)) in own for a, b in pairs)

    def is_connected(self, blocks: Sequence[Sequence[int]]) -> bool:
        """
        以 blocks 为顶点、配对为边构成的图是否连通

        连通的配对正好是对联合累积量有贡献的配对。
        """
        if not blocks:
            return True
        owner = {}
        for b, block in enumerate(blocks):
            for position in block:
                owner[position] = b

        parent = list(range(len(blocks)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.pairs:
            ra, rb = find(owner[a]), find(owner[b])
            if ra != rb:
                parent[ra] = rb
        return len({find(b) for b in range(len(blocks))}) == 1


@dataclass(frozen=True)
class Partition:
    """
    集合划分

    blocks 为规范形式：块内升序，各块按最小元素排序。
    """

    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def canonical(cls, blocks: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(sorted(tuple(sorted(block)) for block in blocks)))

    @property
    def size(self) -> int:
        """块数"""
        return len(self.blocks)

    @property
    def shape(self) -> Tuple[int, ...]:
        """块大小，非增序"""
        return tuple(sorted((len(block) for block in self.blocks), reverse=True))


def _pair_up(items: List[int]) -> Iterator[List[Pair]]:
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for tail in _pair_up(rest):
            yield [(first, items[i])] + tail


def enumerate_pairings(positions: Sequence[int]) -> Iterator[Pairing]:
    """
    枚举位置序列的全部完美配对

    递归地把最小的未配对位置与其后每个位置配对，共 (2k-1)!! 个。
    奇数长度返回空流（对应的矩为零）；空序列产生唯一的空配对。
    """
    items = sorted(positions)
    if len(items) % 2 == 1:
        return
    for pairs in _pair_up(items):
        yield Pairing(tuple(pairs))


def _restricted_growth_strings(n: int) -> Iterator[List[int]]:
    """按字典序生成长度为 n 的限制增长串（原地修改，调用方需自行复制）"""
    labels = [0] * n
    if n == 0:
        yield labels
        return

    def grow(i: int, max_label: int) -> Iterator[List[int]]:
        if i == n:
            yield labels
            return
        for label in range(max_label + 2):
            labels[i] = label
            yield from grow(i + 1, max(max_label, label))

    # 首元素恒为块 0
    yield from grow(1, 0)


def enumerate_set_partitions(count: int) -> Iterator[Partition]:
    """
    枚举 {1..count} 的全部集合划分，共 Bell(count) 个

    count == 0 时产生唯一的空划分（仅供内部递归/边界使用）。
    """
    if count < 0:
        raise InvalidQueryError(f"划分元素个数不能为负: {count}")
    for labels in _restricted_growth_strings(count):
        blocks: List[List[int]] = []
        for position, label in enumerate(labels, start=1):
            if label == len(blocks):
                blocks.append([position])
            else:
                blocks[label].append(position)
        yield Partition(tuple(tuple(block) for block in blocks))


def original_pairs(k: int) -> List[Pair]:
    """原始双元 {1,2},{3,4},...,{2k-1,2k}"""
    return [(2 * i - 1, 2 * i) for i in range(1, k + 1)]


def enumerate_scheme_pairings(k: int) -> Iterator[Pairing]:
    """
    按构造方案枚举双元累积量的配对集合，共 (k-1)! * 2^(k-1) 个

    1. 固定第一对；
    2. 其余各对取全部 (k-1)! 种排列；
    3. 其余各对取全部 2^(k-1) 种对内交换；
    4. 展平为长度 2k 的序列，循环左移一位，再两两重新配对。
    """
    if k < 2:
        raise InvalidQueryError(f"构造方案要求 k >= 2，实际 k={k}")

    pairs = original_pairs(k)
    first, rest = pairs[0], pairs[1:]
    for arrangement in itertools.permutations(rest):
        for flips in itertools.product((False, True), repeat=k - 1):
            sequence = list(first)
            for (a, b), flip in zip(arrangement, flips):
                sequence.extend((b, a) if flip else (a, b))
            shifted = sequence[1:] + sequence[:1]
            yield Pairing.canonical(
                [(shifted[i], shifted[i + 1]) for i in range(0, 2 * k, 2)]
            )


def enumerate_avoiding_pairings(k: int) -> Iterator[Pairing]:
    """
    {1..2k} 上不含任何原始对的全部配对

    k=4 时有 60 个，比构造方案多出 12 个不连通配对。
    """
    forbidden = original_pairs(k)
    for pairing in enumerate_pairings(range(1, 2 * k + 1)):
        if not pairing.contains_any(forbidden):
            yield pairing
