#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
高斯乘积矩测试
"""

import random

import pytest

from src.core.moments import (
    IndexList,
    MomentCache,
    moment,
    moment_memoized,
    moment_via_pairings,
)
from src.core.polyalg import Poly, relabel, term_count
from src.errors import InvalidQueryError


def V(i, j):
    return Poly.var(i, j)


FOUR_DISTINCT = V(1, 2) * V(3, 4) + V(1, 3) * V(2, 4) + V(1, 4) * V(2, 3)
TWO_PAIRS = V(1, 1) * V(2, 2) + 2 * V(1, 2) * V(1, 2)
SAMPLE_MV = (
    3 * V(2, 2) * V(5, 5) * V(2, 8)
    + 6 * V(2, 5) * V(2, 5) * V(2, 8)
    + 6 * V(2, 2) * V(2, 5) * V(5, 8)
)

FIXTURES = [
    ((1, 2, 3, 4), FOUR_DISTINCT),
    ((1, 1, 2, 2), TWO_PAIRS),
    ((2, 5, 2, 5, 2, 8), SAMPLE_MV),
    ((1, 2, 3), Poly.zero()),
    ((), Poly.one()),
    ((4, 7), V(4, 7)),
]


class TestMoment:
    """不带缓存的参考实现"""

    @pytest.mark.parametrize("indices,expected", FIXTURES)
    def test_fixtures(self, indices, expected):
        assert moment(indices) == expected

    def test_order_of_indices_irrelevant(self):
        assert moment((8, 2, 5, 5, 2, 2)) == SAMPLE_MV


class TestMomentMemoized:
    """带缓存实现与参考实现一致"""

    @pytest.mark.parametrize("indices,expected", FIXTURES)
    def test_fixtures(self, indices, expected, fresh_cache):
        assert moment_memoized(indices, fresh_cache) == expected

    def test_twelve_distinct_indices(self, fresh_cache):
        assert term_count(moment_memoized(range(1, 13), fresh_cache)) == 10395

    def test_eight_distinct_indices(self, fresh_cache):
        assert term_count(moment_memoized(range(1, 9), fresh_cache)) == 105

    def test_cache_reused(self):
        cache = MomentCache()
        first = moment_memoized((1, 2, 3, 4, 5, 6), cache)
        entries = len(cache)
        assert entries > 0

        second = moment_memoized((6, 5, 4, 3, 2, 1), cache)
        assert first == second
        assert len(cache) == entries
        assert cache.stats()["hits"] >= 1

        cache.clear()
        assert len(cache) == 0
        assert cache.stats() == {"entries": 0, "hits": 0, "misses": 0}

    def test_random_inputs_agree(self, fresh_cache):
        """100 个随机索引列表上三条计算路径一致"""
        rng = random.Random(12345)
        for _ in range(100):
            length = rng.choice([0, 2, 4, 6, 8, 3, 5])
            indices = [rng.randint(1, 4) for _ in range(length)]
            expected = moment(indices)
            assert moment_memoized(indices, fresh_cache) == expected
            assert moment_via_pairings(indices) == expected


class TestMomentProperties:
    """对称性与重标号"""

    def test_permutation_invariance(self):
        rng = random.Random(99)
        indices = [1, 1, 2, 3, 3, 3, 4, 5]
        expected = moment(indices)
        for _ in range(10):
            shuffled = indices[:]
            rng.shuffle(shuffled)
            assert moment_memoized(shuffled, MomentCache()) == expected

    def test_relabel_commutes_with_moment(self):
        """relabel(μ(ix), σ) == μ(σ(ix))"""
        rng = random.Random(3)
        for _ in range(20):
            indices = [rng.randint(1, 5) for _ in range(6)]
            targets = list(range(1, 6))
            rng.shuffle(targets)
            mapping = dict(zip(range(1, 6), targets))
            assert relabel(moment(indices), mapping) == moment([mapping[i] for i in indices])

    def test_merging_indices(self):
        """把 (1,2,3,4) 中 3->1, 4->2 得到 (1,1,2,2) 的矩"""
        assert relabel(FOUR_DISTINCT, {1: 1, 2: 2, 3: 1, 4: 2}) == TWO_PAIRS

    def test_odd_moments_vanish(self):
        for length in (1, 3, 5, 7):
            assert moment_memoized(range(1, length + 1), MomentCache()).is_zero()

    def test_coefficients_sum_to_pairing_count(self):
        """所有系数之和等于配对数 (n-1)!!"""
        p = moment_memoized((1, 1, 1, 2, 2, 3), MomentCache())
        assert sum(coeff for _, coeff in p.items()) == 15


class TestIndexList:
    def test_sorted(self):
        assert IndexList.of([5, 2, 5, 1]).indices == (1, 2, 5, 5)
        assert len(IndexList.of([5, 2])) == 2

    def test_invalid_index(self):
        with pytest.raises(InvalidQueryError):
            IndexList.of([0, 1])
